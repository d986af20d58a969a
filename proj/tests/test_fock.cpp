#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kfock/fock.hpp"

#include <cmath>
#include <random>

using namespace kfock;

namespace {

// Independent oracle: evaluate the coherent series directly and apply the
// ladder operators as explicit matrices, without renormalization shortcuts.
Eigen::VectorXcd coherent_series(Complex z, int cutoff) {
  Eigen::VectorXcd c(cutoff + 1);
  double log_fact = 0.0;
  for (int n = 0; n <= cutoff; ++n) {
    if (n > 0) log_fact += std::log(double(n));
    c[n] = std::pow(z, n) * std::exp(-std::norm(z) / 2.0 - log_fact / 2.0);
  }
  return c / c.norm();
}

Complex oracle_matrix_expectation(const Eigen::VectorXcd& psi, const Eigen::MatrixXcd& op) {
  return psi.dot(op * psi);
}

}  // namespace

TEST_CASE("coherent state at z = 0 is the vacuum") {
  const FockState1 s = coherent_state_1(0.0, 8);
  CHECK(s.coeffs[0] == Complex(1.0, 0.0));
  for (int n = 1; n <= 8; ++n) CHECK(s.coeffs[n] == Complex(0.0, 0.0));
}

TEST_CASE("coherent state reproduces the series oracle and <a> = z") {
  const Complex z(0.5, 0.0);
  const FockState1 s = coherent_state_1(z, 16);
  const Eigen::VectorXcd oracle = coherent_series(z, 16);
  CHECK((s.coeffs - oracle).norm() < 1e-14);

  const Eigen::MatrixXcd a = ladder_matrix(LadderKind::annihilate, 16);
  const Complex a_oracle = oracle_matrix_expectation(oracle, a);
  CHECK(std::abs(a_expectation(s) - a_oracle) < 1e-14);
  CHECK(std::abs(a_expectation(s) - z) < 1e-10);
}

TEST_CASE("coherent state number expectation approaches |z|^2") {
  const Complex z(1.0, 1.0);
  const FockState1 s = coherent_state_1(z, 32);
  const Eigen::MatrixXcd a = ladder_matrix(LadderKind::annihilate, 32);
  const Eigen::MatrixXcd n_op = a.adjoint() * a;
  const Complex n_direct = expectation(s, n_op);
  CHECK(std::abs(n_direct.imag()) < 1e-14);
  CHECK(std::abs(n_direct.real() - 2.0) < 1e-8);
  CHECK(std::abs(n_expectation(s) - n_direct.real()) < 1e-13);
}

TEST_CASE("truncation guard names the required cutoff") {
  CHECK_THROWS_WITH_AS(coherent_state_1(Complex(2.0, 0.0), 8),
                       doctest::Contains("need cutoff >= 16"), std::invalid_argument);
}

TEST_CASE("two-mode coherent state factorizes") {
  const FockState2 vac = coherent_state_2(0.0, 0.0, 8);
  CHECK(vac.coeffs[0] == Complex(1.0, 0.0));
  CHECK(std::abs(vac.norm() - 1.0) < 1e-15);

  // vacuum V factor keeps <a_V> exactly zero
  const FockState2 s = coherent_state_2(Complex(0.3, 0.0), 0.0, 12);
  CHECK(a_expectation(s, Mode::V) == Complex(0.0, 0.0));
  CHECK(std::abs(a_expectation(s, Mode::H) - Complex(0.3, 0.0)) < 1e-12);
}

TEST_CASE("two-mode coherent Stokes S0 = |z|^2 + |w|^2") {
  const FockState2 s = coherent_state_2(Complex(0.3, 0.0), Complex(0.0, 0.4), 16);
  const auto stokes = stokes_expectations(s);
  CHECK(stokes[0] == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("ladder actions on number states") {
  const FockState1 vac = FockState1::vacuum(8);
  const FockState1 a_vac = apply_ladder(vac, {Mode::single, LadderKind::annihilate});
  CHECK(a_vac.coeffs.norm() == 0.0);

  const FockState1 one = FockState1::number(1, 8);
  const FockState1 a_one = apply_ladder(one, {Mode::single, LadderKind::annihilate});
  CHECK(a_one.coeffs[0] == Complex(1.0, 0.0));

  // number operator via two ladder applications; sqrt(n)*sqrt(n) carries
  // one rounding step
  const FockState1 three = FockState1::number(3, 8);
  const FockState1 n_three = apply_ladder(apply_ladder(three, {Mode::single, LadderKind::annihilate}),
                                          {Mode::single, LadderKind::create});
  CHECK(std::abs(n_three.coeffs[3] - Complex(3.0, 0.0)) < 1e-14);
}

TEST_CASE("creation drops amplitude at the truncation edge") {
  const FockState1 top = FockState1::number(4, 4);
  const FockState1 raised = apply_ladder(top, {Mode::single, LadderKind::create});
  CHECK(raised.coeffs.norm() == 0.0);
}

TEST_CASE("<0|adag a|0> = 0 and one-photon S3") {
  const FockState1 vac = FockState1::vacuum(8);
  CHECK(n_expectation(vac) == 0.0);

  const FockState2 hphoton = FockState2::number(1, 0, 8);
  CHECK(stokes_expectations(hphoton)[3] == 1.0);
}

TEST_CASE("commutator [a, adag] is 1 below the truncation edge") {
  const int cutoff = 10;
  const Eigen::MatrixXcd a = ladder_matrix(LadderKind::annihilate, cutoff);
  const Eigen::MatrixXcd comm = a * a.adjoint() - a.adjoint() * a;
  for (int n = 0; n < cutoff; ++n) CHECK(std::abs(comm(n, n) - 1.0) < 1e-14);
  CHECK(std::abs(comm(cutoff, cutoff) + double(cutoff)) < 1e-14);
}

TEST_CASE("H and V ladder operators commute exactly as matrices") {
  const int cutoff = 5;
  const Eigen::MatrixXcd aH = ladder_matrix2(Mode::H, LadderKind::annihilate, cutoff);
  const Eigen::MatrixXcd aV = ladder_matrix2(Mode::V, LadderKind::annihilate, cutoff);
  CHECK((aH * aV - aV * aH).cwiseAbs().maxCoeff() == 0.0);
  CHECK((aH * aV.adjoint() - aV.adjoint() * aH).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("apply_ladder matches the matrix representation") {
  std::mt19937_64 rng(7);
  auto random_state2 = [&rng](int cutoff) {
    const int dim = (cutoff + 1) * (cutoff + 1);
    Eigen::VectorXcd c(dim);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < dim; ++i) c[i] = Complex(u(rng), u(rng));
    return FockState2(c / c.norm(), cutoff);
  };
  for (Mode mode : {Mode::H, Mode::V})
    for (LadderKind kind : {LadderKind::annihilate, LadderKind::create}) {
      const FockState2 s = random_state2(4);
      const FockState2 applied = apply_ladder(s, {mode, kind});
      const Eigen::VectorXcd via_matrix = ladder_matrix2(mode, kind, 4) * s.coeffs;
      CHECK((applied.coeffs - via_matrix).norm() < 1e-14);
    }
}

TEST_CASE("mode rotation unitary") {
  const int cutoff = 8;

  SUBCASE("gamma = 0 is the identity") {
    const Eigen::MatrixXcd u = mode_rotation_unitary(0.0, cutoff);
    CHECK((u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() < 1e-14);
  }

  SUBCASE("quarter turn swaps the modes up to sign") {
    const Eigen::MatrixXcd u = mode_rotation_unitary(M_PI / 2.0, cutoff);
    const FockState2 rotated = apply_unitary(FockState2::number(1, 0, cutoff), u);
    const int idx01 = rotated.index(0, 1);
    CHECK(std::abs(std::abs(rotated.coeffs[idx01]) - 1.0) < 1e-12);
  }

  SUBCASE("unitary to 1e-12 and composes additively") {
    const Eigen::MatrixXcd u1 = mode_rotation_unitary(0.4, cutoff);
    const Eigen::MatrixXcd u2 = mode_rotation_unitary(0.9, cutoff);
    const Eigen::MatrixXcd u12 = mode_rotation_unitary(1.3, cutoff);
    CHECK((u1.adjoint() * u1 - Eigen::MatrixXcd::Identity(u1.rows(), u1.cols()))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    CHECK((u1 * u2 - u12).cwiseAbs().maxCoeff() < 1e-10);
  }

  SUBCASE("conjugation mixes the ladder operators with cos/sin coefficients") {
    const double gamma = 0.3;
    const Eigen::MatrixXcd u = mode_rotation_unitary(gamma, cutoff);
    // derived oracle: conjugate a_H numerically and compare on the subspace
    // of total number <= cutoff - 1
    const Eigen::MatrixXcd aH = ladder_matrix2(Mode::H, LadderKind::annihilate, cutoff);
    const Eigen::MatrixXcd aV = ladder_matrix2(Mode::V, LadderKind::annihilate, cutoff);
    const Eigen::MatrixXcd conjugated = u * aH * u.adjoint();
    const Eigen::MatrixXcd expected = std::cos(gamma) * aH - std::sin(gamma) * aV;
    const int d = cutoff + 1;
    double worst = 0.0;
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n)
        for (int mm = 0; mm < d; ++mm)
          for (int nn = 0; nn < d; ++nn)
            if (m + n <= cutoff - 1 && mm + nn <= cutoff - 1)
              worst = std::max(worst,
                               std::abs(conjugated(m * d + n, mm * d + nn) -
                                        expected(m * d + n, mm * d + nn)));
    CHECK(worst < 1e-12);
  }

  SUBCASE("coherent (1, 0) rotates to <a_H> = cos(gamma)") {
    const double gamma = 0.3;
    const FockState2 s = coherent_state_2(1.0, 0.0, 16);
    const FockState2 rotated = apply_unitary(s, mode_rotation_unitary(gamma, 16));
    CHECK(std::abs(a_expectation(rotated, Mode::H) - std::cos(gamma)) < 1e-9);
  }
}

TEST_CASE("commutator expectation is exactly 1 on the safe subspace") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int cutoff = 8;
  const Eigen::MatrixXcd a = ladder_matrix(LadderKind::annihilate, cutoff);
  const Eigen::MatrixXcd comm = a * a.adjoint() - a.adjoint() * a;
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(cutoff + 1);
    for (int n = 0; n <= cutoff - 1; ++n) c[n] = Complex(u(rng), u(rng));
    const FockState1 s(c / c.norm(), cutoff);
    const Complex value = expectation(s, comm);
    CHECK(std::abs(value - 1.0) < 1e-14);
  }
}
