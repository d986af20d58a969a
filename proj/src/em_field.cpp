#include "kfock/em_field.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kfock {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

struct KahanVec3 {
  double sum[3] = {0, 0, 0}, comp[3] = {0, 0, 0};
  void add(const Vec3& v) {
    for (int a = 0; a < 3; ++a) {
      double y = v[a] - comp[a];
      double t = sum[a] + y;
      comp[a] = (t - sum[a]) - y;
      sum[a] = t;
    }
  }
  Vec3 value() const { return Vec3(sum[0], sum[1], sum[2]); }
};

struct KahanAccumulator {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

// Complex polarization-weighted amplitude vector of node i:
// eps_H <a_H> + eps_V <a_V>.
Vec3 accumulate_nodes(const EmStateField& field, const SpacetimePoint& x,
                      bool time_derivative, bool curl) {
  const double l52 = std::pow(field.constants.l, 2.5);
  const double lambda = field.constants.lambda;
  const KGrid& grid = *field.grid;
  KahanVec3 acc;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Vec3& k = grid.nodes[i];
    const PolarizationFrame frame = polarization_frame(k);
    const Complex aH = a_expectation(field.states[i], Mode::H);
    const Complex aV = a_expectation(field.states[i], Mode::V);
    Complex e = std::exp(-kI * phase(k, x));
    double scale = lambda * grid.weights[i] * l52 / normalization_factor(k);
    if (time_derivative) {
      e *= kI;  // Re[i F e^{-ikx}]
      scale *= field.constants.c * k.norm();
    }
    Vec3 term;
    if (!curl) {
      for (int a = 0; a < 3; ++a)
        term[a] = scale * (e * (frame.eps_h[a] * aH + frame.eps_v[a] * aV)).real();
    } else {
      const Vec3 crossH = k.cross(frame.eps_h);
      const Vec3 crossV = k.cross(frame.eps_v);
      const Complex ie = kI * e;
      for (int a = 0; a < 3; ++a)
        term[a] = scale * (ie * (crossH[a] * aH + crossV[a] * aV)).real();
    }
    acc.add(term);
  }
  return acc.value();
}

}  // namespace

Vec3 vector_potential(const EmStateField& field, const SpacetimePoint& x) {
  return accumulate_nodes(field, x, false, false);
}

Vec3 electric_field(const EmStateField& field, const SpacetimePoint& x) {
  return accumulate_nodes(field, x, true, false);
}

Vec3 magnetic_field(const EmStateField& field, const SpacetimePoint& x) {
  return accumulate_nodes(field, x, false, true);
}

double gauss_divergence(const EmStateField& field, const SpacetimePoint& x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("gauss_divergence: step must be > 0");
  double div = 0.0;
  for (int a = 0; a < 3; ++a) {
    SpacetimePoint plus = x, minus = x;
    plus.x[a] += h;
    minus.x[a] -= h;
    div += (electric_field(field, plus)[a] - electric_field(field, minus)[a]) / (2.0 * h);
  }
  return div;
}

double quantum_energy_em(const EmStateField& field) {
  const PhysicalConstants& pc = field.constants;
  const double scale = pc.hbar * pc.c * pc.l * pc.l * pc.l;
  KahanAccumulator acc;
  const KGrid& grid = *field.grid;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double n = n_expectation(field.states[i], Mode::H) +
                     n_expectation(field.states[i], Mode::V);
    acc.add(grid.weights[i] * grid.nodes[i].norm() * n);
  }
  return scale * acc.sum;
}

double classical_energy_em(const EmStateField& field) {
  const PhysicalConstants& pc = field.constants;
  const double l5 = std::pow(pc.l, 5);
  const double scale = 0.25 * pc.epsilon0 * pc.lambda * pc.lambda * pc.c * pc.c * l5;
  KahanAccumulator acc;
  const KGrid& grid = *field.grid;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double f2 = std::norm(a_expectation(field.states[i], Mode::H)) +
                      std::norm(a_expectation(field.states[i], Mode::V));
    acc.add(grid.weights[i] * grid.nodes[i].norm() * f2);
  }
  return scale * acc.sum;
}

CalibrationResult calibrate_lambda_l(const PhysicalConstants& constants) {
  constants.validate();
  const double base = std::sqrt(constants.hbar / (constants.epsilon0 * constants.c));
  CalibrationResult out;
  out.lambda_l_paper = 4.0 * base;
  out.lambda_l_self_consistent = 2.0 * base;
  out.ratio = out.lambda_l_paper / out.lambda_l_self_consistent;
  const double alpha = constants.q_el * constants.q_el /
                       (4.0 * std::numbers::pi * constants.epsilon0 * constants.hbar * constants.c);
  out.lambda_l_fine_structure =
      4.0 * (constants.hbar / constants.q_el) * std::sqrt(std::numbers::pi * alpha);
  return out;
}

std::pair<double, double> cross_term_balance(const ScalarProfile& f_h, double x0) {
  const KGrid& grid = *f_h.grid;

  // pair every node with its reflection
  std::vector<std::size_t> mirror(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double tol = 1e-9 * grid.nodes[i].norm();
    bool found = false;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      if ((grid.nodes[j] + grid.nodes[i]).norm() <= tol) {
        mirror[i] = j;
        found = true;
        break;
      }
    }
    if (!found) {
      std::ostringstream msg;
      msg << "cross_term_balance: grid is not symmetric under k -> -k (node " << i
          << " has no counterpart)";
      throw std::invalid_argument(msg.str());
    }
  }

  KahanAccumulator first, second;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::size_t j = mirror[i];
    const Vec3& k = grid.nodes[i];
    const double kn = k.norm();
    const Vec3 xi1 = polarization_frame(k).eps_h;
    const Vec3 xi1m = polarization_frame(Vec3(-k)).eps_h;

    const double common = grid.weights[i] * grid.weights[j] *
                          (f_h.values[i] * f_h.values[j]).real() *
                          std::cos(2.0 * kn * x0) / kn;

    first.add(common * kn * kn * xi1.dot(xi1m));

    // literal Levi-Civita contraction
    double contraction = 0.0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int g = 0; g < 3; ++g) {
          const int e1 = ((a + 1) % 3 == b && (b + 1) % 3 == g)   ? 1
                         : ((a + 2) % 3 == b && (b + 2) % 3 == g) ? -1
                                                                  : 0;
          if (e1 == 0) continue;
          for (int bp = 0; bp < 3; ++bp)
            for (int gp = 0; gp < 3; ++gp) {
              const int e2 = ((a + 1) % 3 == bp && (bp + 1) % 3 == gp)   ? 1
                             : ((a + 2) % 3 == bp && (bp + 2) % 3 == gp) ? -1
                                                                         : 0;
              if (e2 == 0) continue;
              contraction += e1 * e2 * k[b] * k[bp] * xi1[g] * xi1m[gp];
            }
        }
    second.add(common * contraction);
  }
  return {first.sum, second.sum};
}

EmStateField rotate_em_field(const EmStateField& field, const Eigen::Matrix3d& R) {
  auto grid = std::make_shared<KGrid>();
  grid->kind = GridKind::explicit_list;
  grid->weights = field.grid->weights;
  grid->nodes.reserve(field.grid->size());

  EmStateField out;
  out.constants = field.constants;
  out.states.reserve(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    const Vec3& k = field.grid->nodes[i];
    grid->nodes.push_back(R * k);
    const CompensatingRotation comp = compensating_rotation(R, k);
    // U(gamma) a U(gamma)^dag realizes the compensated pair (b_H, b_V);
    // the state picks up the adjoint so that <psi'| a |psi'> = <psi| b |psi>.
    const Eigen::MatrixXcd u = mode_rotation_unitary(-comp.gamma, field.states[i].cutoff);
    out.states.push_back(apply_unitary(field.states[i], u));
  }
  out.grid = std::move(grid);
  return out;
}

}  // namespace kfock
