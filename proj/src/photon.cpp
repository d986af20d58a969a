#include "kfock/photon.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kfock {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

struct KahanAccumulator {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

void SinglePhotonSpec::validate(const KGrid& grid) const {
  if (rho.size() != grid.size() || phase.size() != grid.size())
    throw std::invalid_argument("SinglePhotonSpec: rho/phase count must match node count");
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (!(rho[i] >= 0.0 && rho[i] <= 1.0)) {
      std::ostringstream msg;
      msg << "rho[" << i << "] out of [0,1]";
      throw std::invalid_argument(msg.str());
    }
    if (!std::isfinite(phase[i]))
      throw std::invalid_argument("SinglePhotonSpec: non-finite phase");
  }
}

std::array<double, 4> stokes_expectation(const EmStateField& field) {
  const double l3 = std::pow(field.constants.l, 3);
  KahanAccumulator acc[4];
  const KGrid& grid = *field.grid;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::array<double, 4> s = stokes_expectations(field.states[i]);
    for (int c = 0; c < 4; ++c) acc[c].add(grid.weights[i] * s[c]);
  }
  return {l3 * acc[0].sum, l3 * acc[1].sum, l3 * acc[2].sum, l3 * acc[3].sum};
}

EmStateField single_photon_field(const SinglePhotonSpec& spec, const KGridPtr& grid, int cutoff,
                                 const PhysicalConstants& constants, bool* tail_warning) {
  if (!grid) throw std::invalid_argument("single_photon_field: null grid");
  grid->validate();
  spec.validate(*grid);
  constants.validate();
  if (cutoff < 1) throw std::invalid_argument("single_photon_field: cutoff must be >= 1");

  EmStateField field;
  field.grid = grid;
  field.constants = constants;
  field.states.reserve(grid->size());
  const int d = cutoff + 1;
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double rho = spec.rho[i];
    const Complex one = std::sqrt(rho) * std::exp(kI * spec.phase[i]);
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(d * d);
    c[0] = std::sqrt(1.0 - rho);  // |0,0>
    switch (spec.polarization) {
      case Polarization::linear_h:
        c[1 * d + 0] = one;
        break;
      case Polarization::circular_plus:
        c[1 * d + 0] = one / std::sqrt(2.0);
        c[0 * d + 1] = kI * one / std::sqrt(2.0);
        break;
      case Polarization::circular_minus:
        c[1 * d + 0] = one / std::sqrt(2.0);
        c[0 * d + 1] = -kI * one / std::sqrt(2.0);
        break;
    }
    field.states.emplace_back(std::move(c), cutoff);
  }

  if (tail_warning) {
    std::size_t outer = 0;
    for (std::size_t i = 1; i < grid->size(); ++i)
      if (grid->nodes[i].norm() > grid->nodes[outer].norm()) outer = i;
    *tail_warning = spec.rho[outer] > 1e-3;
  }
  return field;
}

double single_photon_energy(const SinglePhotonSpec& spec, const KGrid& grid,
                            const PhysicalConstants& constants) {
  grid.validate();
  spec.validate(grid);
  constants.validate();
  KahanAccumulator acc;
  for (std::size_t i = 0; i < grid.size(); ++i)
    acc.add(grid.weights[i] * grid.nodes[i].norm() * spec.rho[i]);
  const double l3 = std::pow(constants.l, 3);
  return constants.hbar * constants.c * l3 * acc.sum;
}

PhotonSpin photon_spin(const SinglePhotonSpec& spec, const KGrid& grid,
                       const PhysicalConstants& constants) {
  grid.validate();
  spec.validate(grid);
  constants.validate();
  PhotonSpin out;
  if (spec.polarization == Polarization::linear_h) return out;  // S2 = 0, flagged
  out.circular = true;
  KahanAccumulator acc;
  for (std::size_t i = 0; i < grid.size(); ++i) acc.add(grid.weights[i] * spec.rho[i]);
  const double sign = (spec.polarization == Polarization::circular_plus) ? 1.0 : -1.0;
  out.s2 = sign * std::pow(constants.l, 3) * acc.sum;
  return out;
}

}  // namespace kfock
