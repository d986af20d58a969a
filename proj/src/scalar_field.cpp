#include "kfock/scalar_field.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace kfock {

namespace {

constexpr double kTwoPiCubed = 8.0 * std::numbers::pi * std::numbers::pi * std::numbers::pi;
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

std::vector<Complex> node_a_expectations(const ScalarStateField& field) {
  std::vector<Complex> a(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) a[i] = a_expectation(field.states[i]);
  return a;
}

}  // namespace

double phase(const Vec3& k, const SpacetimePoint& x) { return k.norm() * x.x0 - k.dot(x.x); }

SpacetimePoint boost_point(const LorentzBoost& b, const SpacetimePoint& x) {
  const double ch = std::cosh(b.chi), sh = std::sinh(b.chi);
  SpacetimePoint out = x;
  out.x0 = ch * x.x0 + sh * x.x[2];
  out.x[2] = sh * x.x0 + ch * x.x[2];
  return out;
}

SpacetimePoint boost_point_inverse(const LorentzBoost& b, const SpacetimePoint& x) {
  return boost_point(LorentzBoost{-b.chi}, x);
}

double classical_field(const ScalarProfile& f, const SpacetimePoint& x,
                       const PhysicalConstants& constants) {
  constants.validate();
  const double l = constants.l;
  KahanAccumulator acc;
  const KGrid& grid = *f.grid;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Vec3& k = grid.nodes[i];
    const Complex term = f.values[i] * std::exp(-kI * phase(k, x)) / normalization_factor(k);
    acc.add(2.0 * l * grid.weights[i] * term.real());
  }
  return acc.sum;
}

double classical_energy(const ScalarProfile& f, const PhysicalConstants& constants) {
  constants.validate();
  KahanAccumulator acc;
  const KGrid& grid = *f.grid;
  for (std::size_t i = 0; i < grid.size(); ++i)
    acc.add(grid.weights[i] * grid.nodes[i].norm() * std::norm(f.values[i]));
  return constants.hbar * constants.c * acc.sum;
}

double quantum_energy(const ScalarStateField& field) {
  const PhysicalConstants& pc = field.constants;
  const double scale = pc.hbar * pc.c * pc.l * pc.l * pc.l;
  KahanAccumulator acc;
  const KGrid& grid = *field.grid;
  for (std::size_t i = 0; i < grid.size(); ++i)
    acc.add(grid.weights[i] * grid.nodes[i].norm() * n_expectation(field.states[i]));
  return scale * acc.sum;
}

double field_expectation(const ScalarStateField& field, const SpacetimePoint& x) {
  const double l52 = std::pow(field.constants.l, 2.5);
  KahanAccumulator acc;
  const KGrid& grid = *field.grid;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Vec3& k = grid.nodes[i];
    const Complex term =
        a_expectation(field.states[i]) * std::exp(-kI * phase(k, x)) / normalization_factor(k);
    acc.add(2.0 * l52 * grid.weights[i] * term.real());
  }
  return acc.sum;
}

double energy_inequality_gap(const ScalarStateField& field) {
  const PhysicalConstants& pc = field.constants;
  const double scale = pc.hbar * pc.c * pc.l * pc.l * pc.l;
  KahanAccumulator acc;
  const KGrid& grid = *field.grid;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double n = n_expectation(field.states[i]);
    const double a2 = std::norm(a_expectation(field.states[i]));
    acc.add(grid.weights[i] * grid.nodes[i].norm() * (n - a2));
  }
  return scale * acc.sum;
}

std::complex<double> two_point_function(const ScalarStateField& field, const SpacetimePoint& x,
                                        const SpacetimePoint& y) {
  const KGrid& grid = *field.grid;
  const double l52 = std::pow(field.constants.l, 2.5);
  const std::vector<Complex> a = node_a_expectations(field);

  // c_i = w_i l^{5/2} / N_i; phases split so that the (i, j) term is
  // conj(px_i) py_j with px_i = e^{-i k_i x}, py_j = e^{-i k_j y}.
  std::vector<double> c(grid.size());
  std::vector<Complex> px(grid.size()), py(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    c[i] = grid.weights[i] * l52 / normalization_factor(grid.nodes[i]);
    px[i] = std::exp(-kI * phase(grid.nodes[i], x));
    py[i] = std::exp(-kI * phase(grid.nodes[i], y));
  }

  KahanAccumulator re, im;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const Complex q = (i == j) ? Complex(n_expectation(field.states[i]), 0.0)
                                 : std::conj(a[i]) * a[j];
      const Complex term = c[i] * c[j] * std::conj(px[i]) * py[j] * q;
      re.add(term.real());
      im.add(term.imag());
    }
  }
  return {re.sum, im.sum};
}

double energy_density(const ScalarStateField& field, const SpacetimePoint& x) {
  const KGrid& grid = *field.grid;
  const PhysicalConstants& pc = field.constants;
  const double pref = pc.hbar * pc.c * pc.l * pc.l * pc.l / (2.0 * kTwoPiCubed);
  const std::vector<Complex> a = node_a_expectations(field);

  std::vector<Complex> ph(grid.size());
  std::vector<double> kn(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ph[i] = std::exp(-kI * phase(grid.nodes[i], x));
    kn[i] = grid.nodes[i].norm();
  }

  KahanAccumulator acc;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    // diagonal: kernel at k = k' is 2 |k|
    acc.add(pref * grid.weights[i] * grid.weights[i] * 2.0 * kn[i] *
            n_expectation(field.states[i]));
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const double kernel =
          (kn[i] * kn[j] + grid.nodes[i].dot(grid.nodes[j])) / std::sqrt(kn[i] * kn[j]);
      const Complex pair = std::conj(ph[i] * a[i]) * (ph[j] * a[j]);
      acc.add(pref * grid.weights[i] * grid.weights[j] * kernel * 2.0 * pair.real());
    }
  }
  return acc.sum;
}

std::complex<double> commutator_check(const Vec3& k, const SpacetimePoint& x,
                                      const SpacetimePoint& y, const FockState1& probe) {
  const int bound = support_bound(probe);
  if (bound > probe.cutoff - 2) {
    std::ostringstream msg;
    msg << "commutator_check: probe support reaches number " << bound
        << "; need support <= cutoff - 2 = " << probe.cutoff - 2;
    throw std::invalid_argument(msg.str());
  }
  const Eigen::MatrixXcd a = ladder_matrix(LadderKind::annihilate, probe.cutoff);
  const Eigen::MatrixXcd ad = a.adjoint();
  auto field_op = [&](const SpacetimePoint& p) -> Eigen::MatrixXcd {
    const Complex e = std::exp(-kI * phase(k, p));
    return e * a + std::conj(e) * ad;
  };
  const Eigen::MatrixXcd px = field_op(x), py = field_op(y);
  const Eigen::MatrixXcd comm = px * py - py * px;
  const SpacetimePoint diff{x.x0 - y.x0, x.x - y.x};
  return expectation(probe, comm) + 2.0 * kI * std::sin(phase(k, diff));
}

ScalarStateField rotate_field(const ScalarStateField& field, const Eigen::Matrix3d& R) {
  auto grid = std::make_shared<KGrid>();
  grid->kind = GridKind::explicit_list;
  grid->weights = field.grid->weights;
  grid->nodes.reserve(field.grid->size());
  for (const Vec3& k : field.grid->nodes) grid->nodes.push_back(R * k);
  ScalarStateField out;
  out.grid = std::move(grid);
  out.states = field.states;
  out.constants = field.constants;
  return out;
}

ScalarStateField rotate_field_on_grid(const ScalarStateField& field, const Eigen::Matrix3d& R) {
  const KGrid& grid = *field.grid;
  ScalarStateField out;
  out.grid = field.grid;
  out.constants = field.constants;
  out.states.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Vec3 pre = R.transpose() * grid.nodes[i];
    const double tol = 1e-9 * grid.nodes[i].norm();
    bool found = false;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      if ((grid.nodes[j] - pre).norm() <= tol) {
        out.states.push_back(field.states[j]);
        found = true;
        break;
      }
    }
    if (!found) {
      std::ostringstream msg;
      msg << "rotate_field_on_grid: grid is not closed under the rotation (no node matches "
             "R^T k for node "
          << i << ")";
      throw std::invalid_argument(msg.str());
    }
  }
  return out;
}

ScalarStateField boost_field(const ScalarStateField& field, const LorentzBoost& boost) {
  const double ch = std::cosh(boost.chi), sh = std::sinh(boost.chi);
  auto grid = std::make_shared<KGrid>();
  grid->kind = GridKind::explicit_list;
  grid->nodes.reserve(field.grid->size());
  grid->weights.reserve(field.grid->size());
  for (std::size_t i = 0; i < field.grid->size(); ++i) {
    const Vec3& k = field.grid->nodes[i];
    const double kn = k.norm();
    const Vec3 kp(k[0], k[1], k[2] * ch + kn * sh);
    grid->nodes.push_back(kp);
    grid->weights.push_back(field.grid->weights[i] * std::sqrt(kp.norm() / kn));
  }
  grid->validate();
  ScalarStateField out;
  out.grid = std::move(grid);
  out.states = field.states;
  out.constants = field.constants;
  return out;
}

double oscillator_displacement(std::complex<double> f_at_k, const Vec3& k,
                               const SpacetimePoint& x, double mass,
                               const PhysicalConstants& constants) {
  constants.validate();
  if (!(mass > 0.0)) throw std::domain_error("oscillator_displacement: mass must be > 0");
  const double kn = k.norm();
  if (!(kn > 0.0)) throw std::domain_error("oscillator_displacement: |k| must be > 0");
  const double r = std::sqrt(constants.hbar / (mass * constants.c * kn));
  const Complex amp = f_at_k * std::exp(-kI * phase(k, x));
  return std::sqrt(2.0) * r * std::pow(constants.l, -1.5) * amp.real();
}

}  // namespace kfock
