#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kfock/polarization.hpp"

#include <cmath>
#include <random>

using namespace kfock;

namespace {

std::mt19937_64 rng(20240518);

Vec3 random_k(double kmin, double kmax) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    Vec3 v(u(rng), u(rng), u(rng));
    const double n = v.norm();
    if (n > 0.05) return v * (kmin + (kmax - kmin) * std::abs(u(rng))) / n;
  }
}

Eigen::Matrix3d random_rotation() {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vec3 axis;
  do axis = Vec3(u(rng), u(rng), u(rng));
  while (axis.norm() < 0.1);
  axis.normalize();
  return Eigen::AngleAxisd(u(rng) * M_PI, axis).toRotationMatrix();
}

}  // namespace

TEST_CASE("frame along the third axis is the identity") {
  const PolarizationFrame frame = polarization_frame(Vec3(0, 0, 5));
  CHECK((frame.xi - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("frame for k along the second axis") {
  const PolarizationFrame frame = polarization_frame(Vec3(0, 1, 0));
  Eigen::Matrix3d expected;
  expected << 1, 0, 0, 0, 0, -1, 0, 1, 0;
  CHECK((frame.xi - expected).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((frame.xi * Vec3(0, 1, 0) - Vec3(0, 0, 1)).norm() < 1e-15);
}

TEST_CASE("singular ray k2 = k3 = 0 uses the alpha = 0 convention") {
  const PolarizationFrame frame = polarization_frame(Vec3(1, 0, 0));
  Eigen::Matrix3d expected;
  expected << 0, 0, -1, 0, 1, 0, 1, 0, 0;
  CHECK((frame.xi - expected).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((frame.xi * Vec3(1, 0, 0) - Vec3(0, 0, 1)).norm() < 1e-15);
}

TEST_CASE("frame rejects k = 0") {
  CHECK_THROWS_AS(polarization_frame(Vec3(0, 0, 0)), std::domain_error);
}

TEST_CASE("frame properties over 1000 random wave vectors") {
  double worst_rotation = 0.0, worst_orthogonality = 0.0, worst_det = 0.0, worst_triad = 0.0,
         worst_transverse = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Vec3 k = random_k(0.05, 5.0);
    const PolarizationFrame frame = polarization_frame(k);
    worst_rotation = std::max(worst_rotation, (frame.xi * k - k.norm() * Vec3(0, 0, 1)).norm());
    worst_orthogonality = std::max(
        worst_orthogonality,
        (frame.xi.transpose() * frame.xi - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff());
    worst_det = std::max(worst_det, std::abs(frame.xi.determinant() - 1.0));
    worst_triad =
        std::max(worst_triad, (frame.eps_h.cross(frame.eps_v) - k.normalized()).norm());
    worst_transverse = std::max(worst_transverse, std::abs(frame.eps_h.dot(k)) / k.norm());
    worst_transverse = std::max(worst_transverse, std::abs(frame.eps_v.dot(k)) / k.norm());
  }
  CHECK(worst_rotation < 1e-12);
  CHECK(worst_orthogonality < 1e-12);
  CHECK(worst_det < 1e-12);
  CHECK(worst_triad < 1e-12);
  CHECK(worst_transverse < 1e-12);
}

TEST_CASE("compensating rotation: identity R") {
  const Vec3 k(0.3, -0.7, 1.1);
  const CompensatingRotation comp = compensating_rotation(Eigen::Matrix3d::Identity(), k);
  CHECK((comp.m - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(std::abs(comp.gamma) < 1e-14);
}

TEST_CASE("rotation about the propagation axis appears directly as gamma") {
  const double theta = 0.7;
  const Eigen::Matrix3d R = Eigen::AngleAxisd(theta, Vec3(0, 0, 1)).toRotationMatrix();
  const CompensatingRotation comp = compensating_rotation(R, Vec3(0, 0, 1));
  CHECK(comp.gamma == doctest::Approx(theta).epsilon(1e-13));
  CHECK((comp.m - R).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("closed-form gamma matches the direct matrix over random (R, k)") {
  int done = 0;
  double worst = 0.0, worst_axis = 0.0, worst_unit = 0.0;
  while (done < 200) {
    const Vec3 k = random_k(0.2, 4.0);
    const Eigen::Matrix3d R = random_rotation();
    const Vec3 kp = R * k;
    if (std::hypot(k[1], k[2]) < 0.05 * k.norm()) continue;
    if (std::hypot(kp[1], kp[2]) < 0.05 * kp.norm()) continue;
    const CompensatingRotation comp = compensating_rotation(R, k);
    REQUIRE(comp.closed_form_valid);
    ++done;
    worst = std::max(worst, std::abs(comp.cos_gamma_closed - comp.m(0, 0)));
    worst = std::max(worst, std::abs(comp.sin_gamma_closed - comp.m(1, 0)));
    worst_unit = std::max(worst_unit, std::abs(comp.cos_gamma_closed * comp.cos_gamma_closed +
                                               comp.sin_gamma_closed * comp.sin_gamma_closed - 1.0));
    for (int i = 0; i < 3; ++i) {
      const double expected = (i == 2) ? 1.0 : 0.0;
      worst_axis = std::max(worst_axis, std::abs(comp.m(2, i) - expected));
      worst_axis = std::max(worst_axis, std::abs(comp.m(i, 2) - expected));
    }
  }
  CHECK(worst < 1e-10);
  CHECK(worst_axis < 1e-10);
  CHECK(worst_unit < 1e-12);
}

TEST_CASE("closed form is flagged invalid when R k lands on the singular ray") {
  // rotate e3 onto e1: cos(beta') = 0 there
  const Eigen::Matrix3d R = Eigen::AngleAxisd(M_PI / 2.0, Vec3(0, 1, 0)).toRotationMatrix();
  const CompensatingRotation comp = compensating_rotation(R, Vec3(0, 0, 1));
  CHECK_FALSE(comp.closed_form_valid);
  // the direct matrix is still a rotation about axis 3
  CHECK(std::abs(comp.m(2, 2) - 1.0) < 1e-12);
}
