#include "kfock/verification.hpp"

#include "kfock/em_field.hpp"
#include "kfock/photon.hpp"
#include "kfock/scalar_field.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace kfock {

namespace {

constexpr double kPi = std::numbers::pi;

// Deterministic helper on top of mt19937_64: all variates are derived from
// the raw 64-bit stream with fixed arithmetic, so the draw sequence does not
// depend on library distribution internals.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return double(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

  Complex complex_in_disk(double radius) {
    while (true) {
      const double re = uniform(-1.0, 1.0), im = uniform(-1.0, 1.0);
      if (re * re + im * im <= 1.0) return radius * Complex(re, im);
    }
  }

  Vec3 unit_vector() {
    while (true) {
      Vec3 v(normal(), normal(), normal());
      const double n = v.norm();
      if (n > 1e-6) return v / n;
    }
  }

  Vec3 wave_vector(double kmin, double kmax) { return uniform(kmin, kmax) * unit_vector(); }

  Eigen::Matrix3d rotation() {
    const Vec3 axis = unit_vector();
    const double angle = uniform(0.0, 2.0 * kPi);
    return Eigen::AngleAxisd(angle, axis).toRotationMatrix();
  }

  SpacetimePoint event(double extent) {
    SpacetimePoint x;
    x.x0 = uniform(-extent, extent);
    x.x = Vec3(uniform(-extent, extent), uniform(-extent, extent), uniform(-extent, extent));
    return x;
  }

  FockState1 state(int cutoff, int max_support) {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(cutoff + 1);
    for (int n = 0; n <= max_support; ++n) c[n] = Complex(normal(), normal());
    c /= c.norm();
    return FockState1(std::move(c), cutoff);
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

ScalarProfile gaussian_profile(const KGridPtr& grid, Complex amplitude, double width) {
  std::vector<Complex> values(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double k2 = grid->nodes[i].squaredNorm();
    values[i] = amplitude * std::exp(-k2 / (2.0 * width * width));
  }
  return ScalarProfile(grid, std::move(values));
}

PhotonProfile gaussian_photon_profile(const KGridPtr& grid, Complex amp_h, Complex amp_v,
                                      double width) {
  std::vector<Complex> h(grid->size()), v(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double g = std::exp(-grid->nodes[i].squaredNorm() / (2.0 * width * width));
    h[i] = amp_h * g;
    v[i] = amp_v * g;
  }
  return PhotonProfile(grid, std::move(h), std::move(v));
}

VerificationCheck make_check(std::string name, double measured, double tolerance,
                             std::string detail = {}) {
  VerificationCheck check;
  check.name = std::move(name);
  check.measured = measured;
  check.tolerance = tolerance;
  check.passed = measured <= tolerance;
  check.detail = std::move(detail);
  return check;
}

// --- individual checks -----------------------------------------------------

VerificationCheck check_coherent_equality_scalar() {
  const KGridPtr grid = make_spherical_grid(24, 26, 1.0);
  const ScalarProfile profile = gaussian_profile(grid, Complex(0.4, 0.15), 1.0);
  const ScalarStateField field = coherent_field(profile, 16);
  const double e_quantum = quantum_energy(field);
  const double e_classical = classical_energy(profile);
  const double rel = std::abs(e_quantum - e_classical) / e_quantum;
  return make_check("coherent-energy-equality-scalar", rel, 1e-8,
                    "Gaussian profile, 24x26 grid, cutoff 16");
}

VerificationCheck check_coherent_equality_em() {
  PhysicalConstants pc;
  pc.lambda = calibrate_lambda_l(pc).lambda_l_self_consistent / pc.l;
  const KGridPtr grid = make_spherical_grid(24, 26, 1.0);
  const PhotonProfile profile =
      gaussian_photon_profile(grid, Complex(0.4, 0.0), Complex(0.0, 0.3), 1.0);
  const EmStateField field = coherent_field(profile, 16, pc);
  const double e_quantum = quantum_energy_em(field);
  const double e_classical = classical_energy_em(field);
  const double rel = std::abs(e_quantum - e_classical) / e_quantum;
  return make_check("coherent-energy-equality-em", rel, 1e-8,
                    "Gaussian H/V profiles, 24x26 grid, cutoff 16, self-consistent lambda l");
}

VerificationCheck check_cauchy_schwarz(DetRng& rng) {
  double worst = -1e300;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Vec3> nodes;
    std::vector<double> weights;
    for (int i = 0; i < 10; ++i) {
      nodes.push_back(rng.wave_vector(0.1, 3.0));
      weights.push_back(rng.uniform(0.1, 1.0));
    }
    ScalarStateField field;
    field.grid = make_explicit_grid(std::move(nodes), std::move(weights));
    for (int i = 0; i < 10; ++i) field.states.push_back(rng.state(8, 8));
    worst = std::max(worst, -energy_inequality_gap(field));
  }
  return make_check("cauchy-schwarz-gap", worst, 1e-12,
                    "100 random state fields, cutoff 8; worst -(E - E_cl)");
}

VerificationCheck check_frame_geometry(DetRng& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Vec3 k = rng.wave_vector(0.05, 5.0);
    const PolarizationFrame frame = polarization_frame(k);
    const Vec3 rotated = frame.xi * k;
    worst = std::max(worst, (rotated - k.norm() * Vec3(0, 0, 1)).norm());
    const Eigen::Matrix3d gram = frame.xi.transpose() * frame.xi;
    worst = std::max(worst, (gram - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff());
    worst = std::max(worst, (frame.eps_h.cross(frame.eps_v) - k / k.norm()).norm());
  }
  return make_check("polarization-frame-geometry", worst, 1e-12,
                    "1000 random k: Xi k = |k| e3, orthogonality, right-handed triad");
}

VerificationCheck check_compensating_rotation(DetRng& rng) {
  double worst = 0.0;
  int done = 0;
  while (done < 200) {
    const Vec3 k = rng.wave_vector(0.2, 4.0);
    const Eigen::Matrix3d R = rng.rotation();
    const Vec3 kp = R * k;
    // keep both k and R k clearly off the singular ray
    if (std::hypot(k[1], k[2]) < 0.05 * k.norm()) continue;
    if (std::hypot(kp[1], kp[2]) < 0.05 * kp.norm()) continue;
    const CompensatingRotation comp = compensating_rotation(R, k);
    if (!comp.closed_form_valid) continue;
    ++done;
    worst = std::max(worst, std::abs(comp.cos_gamma_closed - comp.m(0, 0)));
    worst = std::max(worst, std::abs(comp.sin_gamma_closed - comp.m(1, 0)));
    for (int i = 0; i < 3; ++i) {
      const double expect = (i == 2) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(comp.m(2, i) - expect));
      worst = std::max(worst, std::abs(comp.m(i, 2) - expect));
    }
  }
  return make_check("compensating-rotation-closed-form", worst, 1e-10,
                    "200 random (R, k): closed-form gamma vs direct M, third row/column = e3");
}

VerificationCheck check_gauss_law(DetRng& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec3> nodes;
    std::vector<double> weights;
    std::vector<Complex> h, v;
    for (int i = 0; i < 8; ++i) {
      nodes.push_back(rng.wave_vector(0.3, 2.5));
      weights.push_back(rng.uniform(0.2, 1.0));
      h.push_back(rng.complex_in_disk(0.8));
      v.push_back(rng.complex_in_disk(0.8));
    }
    const KGridPtr grid = make_explicit_grid(std::move(nodes), std::move(weights));
    const EmStateField field =
        coherent_field(PhotonProfile(grid, std::move(h), std::move(v)), 8);
    double max_div = 0.0, max_e = 0.0;
    for (int p = 0; p < 10; ++p) {
      const SpacetimePoint x = rng.event(2.0);
      max_div = std::max(max_div, std::abs(gauss_divergence(field, x, 1e-4)));
      max_e = std::max(max_e, electric_field(field, x).norm());
    }
    worst = std::max(worst, max_div / max_e);
  }
  return make_check("gauss-law", worst, 1e-6,
                    "20 random coherent EM fields x 10 probes: |div E| / max |E|");
}

VerificationCheck check_covariance_scalar_boost(DetRng& rng) {
  const KGridPtr grid = make_spherical_grid(12, 14, 1.0);
  const ScalarProfile profile = gaussian_profile(grid, Complex(0.5, 0.2), 1.0);
  const ScalarStateField field = coherent_field(profile, 12);
  const LorentzBoost boost{0.3};
  const ScalarStateField boosted = boost_field(field, boost);
  double worst = 0.0;
  for (int p = 0; p < 10; ++p) {
    const SpacetimePoint x = rng.event(2.0);
    const double lhs = field_expectation(boosted, x);
    const double rhs = field_expectation(field, boost_point_inverse(boost, x));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return make_check("covariance-scalar-boost", worst, 1e-8,
                    "boost chi = 0.3: phi'(x) = phi(boost^-1 x) at 10 probes");
}

VerificationCheck check_covariance_scalar_rotation(DetRng& rng) {
  const KGridPtr grid = make_spherical_grid(12, 14, 1.0);
  const ScalarProfile profile = gaussian_profile(grid, Complex(0.5, -0.1), 1.0);
  const ScalarStateField field = coherent_field(profile, 12);
  const Eigen::Matrix3d R = rng.rotation();
  const ScalarStateField rotated = rotate_field(field, R);
  double worst = 0.0;
  for (int p = 0; p < 10; ++p) {
    const SpacetimePoint x = rng.event(2.0);
    SpacetimePoint back = x;
    back.x = R.transpose() * x.x;
    worst = std::max(worst, std::abs(field_expectation(rotated, x) - field_expectation(field, back)));
  }
  const double e0 = quantum_energy(field);
  const double energy_residual = std::abs(quantum_energy(rotated) - e0) / e0;
  VerificationCheck check;
  check.name = "covariance-scalar-rotation";
  check.measured = std::max(worst, energy_residual);
  check.tolerance = 1e-8;
  check.passed = worst <= 1e-8 && energy_residual <= 1e-10;
  check.detail = "random R: phi'(x) = phi(R^-1 x) at 10 probes; energy preserved to 1e-10";
  return check;
}

VerificationCheck check_covariance_em_rotation(DetRng& rng) {
  const KGridPtr grid = make_spherical_grid(4, 14, 1.0);
  const PhotonProfile profile =
      gaussian_photon_profile(grid, Complex(0.35, 0.1), Complex(-0.1, 0.25), 1.0);
  const EmStateField field = coherent_field(profile, 8);
  const Eigen::Matrix3d R = rng.rotation();
  const EmStateField rotated = rotate_em_field(field, R);
  double worst = 0.0;
  for (int p = 0; p < 10; ++p) {
    const SpacetimePoint x = rng.event(2.0);
    SpacetimePoint back = x;
    back.x = R.transpose() * x.x;
    const Vec3 lhs = vector_potential(rotated, x);
    const Vec3 rhs = R * vector_potential(field, back);
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  const double e0 = quantum_energy_em(field);
  const double e1 = quantum_energy_em(rotated);
  const double energy_residual = std::abs(e1 - e0) / e0;
  VerificationCheck check;
  check.name = "covariance-em-rotation";
  check.measured = std::max(worst, energy_residual);
  check.tolerance = 1e-8;
  check.passed = worst <= 1e-8 && energy_residual <= 1e-10;
  check.detail = "random R: A'(x) = R A(R^-1 x) at 10 probes; energy preserved to 1e-10";
  return check;
}

VerificationCheck check_energy_density_box(DetRng& rng) {
  const KGridPtr grid = make_box_grid(2.0 * kPi, 2);
  std::vector<Complex> values(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double g = std::exp(-grid->nodes[i].squaredNorm() / 4.0);
    values[i] = rng.complex_in_disk(0.5) * g + Complex(0.2, 0.0) * g;
  }
  const ScalarProfile profile(grid, std::move(values));
  const ScalarStateField field = coherent_field(profile, 8);
  const double e_total = quantum_energy(field);

  const double side = 2.0 * kPi;
  const int n = 9;  // exact for the mode differences present (|m| <= 4)
  const double cell = std::pow(side / n, 3);
  double integral = 0.0, comp = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        SpacetimePoint x;
        x.x0 = 0.3;
        x.x = side / n * Vec3(i, j, m);
        const double term = cell * energy_density(field, x) - comp;
        const double t = integral + term;
        comp = (t - integral) - term;
        integral = t;
      }
  const double rel = std::abs(integral - e_total) / e_total;
  return make_check("energy-density-box", rel, 1e-10,
                    "box modes L = 2 pi, 5^3 modes: |integral of e(x) - E| / E");
}

VerificationCheck check_commutator(DetRng& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Vec3 k = rng.wave_vector(0.2, 3.0);
    const SpacetimePoint x = rng.event(2.0);
    const SpacetimePoint y = rng.event(2.0);
    const FockState1 probe = rng.state(8, 6);
    worst = std::max(worst, std::abs(commutator_check(k, x, y, probe)));
  }
  return make_check("commutator-identity", worst, 1e-12,
                    "50 random (k, x, y, probe), support <= cutoff - 2");
}

VerificationCheck check_cross_term_balance(DetRng& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Vec3> nodes;
    std::vector<double> weights;
    std::vector<Complex> values;
    for (int i = 0; i < 6; ++i) {
      const Vec3 k = rng.wave_vector(0.3, 3.0);
      const double w = rng.uniform(0.2, 1.0);
      const double f = rng.uniform(0.25, 1.0);  // even, real
      nodes.push_back(k);
      nodes.push_back(-k);
      weights.push_back(w);
      weights.push_back(w);
      values.emplace_back(f, 0.0);
      values.emplace_back(f, 0.0);
    }
    const ScalarProfile profile(make_explicit_grid(std::move(nodes), std::move(weights)),
                                std::move(values));
    const auto [first, second] = cross_term_balance(profile, 0.7);
    const double scale = std::max({std::abs(first), std::abs(second), 1e-30});
    worst = std::max(worst, std::abs(first - second) / scale);
  }
  return make_check("cross-term-balance", worst, 1e-10,
                    "5 random symmetric grids, even profiles: relative mismatch of the two "
                    "counter-propagating cross terms");
}

VerificationCheck check_stokes_coherent_identity(DetRng& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const FockState2 state =
        coherent_state_2(rng.complex_in_disk(0.3), rng.complex_in_disk(0.3), 12);
    const std::array<double, 4> s = stokes_expectations(state);
    worst = std::max(worst, std::abs(s[0] * s[0] - s[1] * s[1] - s[2] * s[2] - s[3] * s[3]));
  }
  return make_check("stokes-coherent-identity", worst, 1e-12,
                    "per-node s0^2 = s1^2 + s2^2 + s3^2 for coherent states");
}

VerificationCheck check_single_photon_linear_s2(DetRng& rng) {
  const KGridPtr grid = make_spherical_grid(8, 6, 1.0);
  SinglePhotonSpec spec;
  spec.polarization = Polarization::linear_h;
  for (std::size_t i = 0; i < grid->size(); ++i) {
    spec.rho.push_back(rng.uniform(0.0, 1.0) * std::exp(-grid->nodes[i].squaredNorm()));
    spec.phase.push_back(rng.uniform(0.0, 2.0 * kPi));
  }
  const EmStateField field = single_photon_field(spec, grid, 4);
  const double s2 = stokes_expectation(field)[2];
  return make_check("single-photon-linear-s2", std::abs(s2), 0.0,
                    "linearly polarized one-photon field has S2 = 0 exactly");
}

VerificationCheck check_single_photon_spin(DetRng& rng) {
  double worst = 0.0;
  for (Polarization pol : {Polarization::circular_plus, Polarization::circular_minus}) {
    const KGridPtr grid = make_spherical_grid(8, 6, 1.0);
    SinglePhotonSpec spec;
    spec.polarization = pol;
    for (std::size_t i = 0; i < grid->size(); ++i) {
      spec.rho.push_back(rng.uniform(0.2, 1.0) * std::exp(-grid->nodes[i].squaredNorm()));
      spec.phase.push_back(rng.uniform(0.0, 2.0 * kPi));
    }
    const EmStateField field = single_photon_field(spec, grid, 4);
    const double via_stokes = stokes_expectation(field)[2];
    const double via_spec = photon_spin(spec, *grid).s2;
    worst = std::max(worst, std::abs(via_stokes - via_spec));
  }
  return make_check("single-photon-circular-spin", worst, 1e-10,
                    "circular spin: quadrature of rho vs Stokes S2 expectation");
}

VerificationCheck check_single_photon_extreme_rho(DetRng& rng) {
  const KGridPtr grid = make_spherical_grid(6, 6, 1.0);
  SinglePhotonSpec spec;
  spec.polarization = Polarization::linear_h;
  for (std::size_t i = 0; i < grid->size(); ++i) {
    spec.rho.push_back(rng.uniform() < 0.5 ? 0.0 : 1.0);
    spec.phase.push_back(rng.uniform(0.0, 2.0 * kPi));
  }
  const EmStateField field = single_photon_field(spec, grid, 4);
  double worst = 0.0;
  for (int p = 0; p < 5; ++p)
    worst = std::max(worst, vector_potential(field, rng.event(2.0)).cwiseAbs().maxCoeff());
  return make_check("single-photon-extreme-rho", worst, 0.0,
                    "rho in {0, 1} everywhere gives A identically 0");
}

VerificationCheck check_calibration() {
  PhysicalConstants pc;
  const CalibrationResult cal = calibrate_lambda_l(pc);
  pc.lambda = cal.lambda_l_self_consistent / pc.l;
  const KGridPtr grid = make_spherical_grid(10, 14, 1.0);
  const PhotonProfile profile =
      gaussian_photon_profile(grid, Complex(0.5, 0.0), Complex(0.2, 0.2), 1.0);
  const EmStateField field = coherent_field(profile, 14, pc);
  const double e_quantum = quantum_energy_em(field);
  const double e_classical = classical_energy_em(field);
  const double rel = std::abs(e_quantum - e_classical) / e_quantum;
  std::string detail = "lambda_l_paper = " + std::to_string(cal.lambda_l_paper) +
                       ", lambda_l_self_consistent = " +
                       std::to_string(cal.lambda_l_self_consistent) +
                       ", ratio = " + std::to_string(cal.ratio);
  return make_check("calibration-self-consistency", rel, 1e-10, std::move(detail));
}

}  // namespace

std::vector<VerificationCheck> run_verification(std::uint64_t seed) {
  DetRng rng(seed);
  std::vector<VerificationCheck> checks;
  checks.push_back(check_coherent_equality_scalar());
  checks.push_back(check_coherent_equality_em());
  checks.push_back(check_cauchy_schwarz(rng));
  checks.push_back(check_frame_geometry(rng));
  checks.push_back(check_compensating_rotation(rng));
  checks.push_back(check_gauss_law(rng));
  checks.push_back(check_covariance_scalar_boost(rng));
  checks.push_back(check_covariance_scalar_rotation(rng));
  checks.push_back(check_covariance_em_rotation(rng));
  checks.push_back(check_energy_density_box(rng));
  checks.push_back(check_commutator(rng));
  checks.push_back(check_cross_term_balance(rng));
  checks.push_back(check_stokes_coherent_identity(rng));
  checks.push_back(check_single_photon_linear_s2(rng));
  checks.push_back(check_single_photon_spin(rng));
  checks.push_back(check_single_photon_extreme_rho(rng));
  checks.push_back(check_calibration());
  return checks;
}

nlohmann::json verification_to_json(const std::vector<VerificationCheck>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const auto& check : checks) {
    arr.push_back({{"name", check.name},
                   {"passed", check.passed},
                   {"measured", check.measured},
                   {"tolerance", check.tolerance},
                   {"detail", check.detail}});
    all = all && check.passed;
  }
  return {{"checks", arr}, {"all_passed", all}};
}

}  // namespace kfock
