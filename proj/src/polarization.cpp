#include "kfock/polarization.hpp"

#include <cmath>
#include <stdexcept>

namespace kfock {

PolarizationFrame polarization_frame(const Vec3& k) {
  const double kn = k.norm();
  if (!(kn > 0.0)) throw std::domain_error("polarization_frame: |k| must be > 0");

  const double rho = std::hypot(k[1], k[2]);  // sqrt(k2^2 + k3^2)
  double cos_a = 1.0, sin_a = 0.0;            // alpha = 0 on the singular ray
  if (rho > 0.0) {
    cos_a = k[2] / rho;
    sin_a = k[1] / rho;
  }
  const double cos_b = rho / kn;  // >= 0 always
  const double sin_b = k[0] / kn;

  PolarizationFrame frame;
  frame.k = k;
  frame.xi << cos_b, -sin_a * sin_b, -sin_b * cos_a,
              0.0,    cos_a,         -sin_a,
              sin_b,  sin_a * cos_b,  cos_a * cos_b;
  frame.eps_h = frame.xi.row(0);
  frame.eps_v = frame.xi.row(1);
  return frame;
}

CompensatingRotation compensating_rotation(const Eigen::Matrix3d& R, const Vec3& k) {
  const PolarizationFrame at_k = polarization_frame(k);
  const Vec3 kp = R * k;
  const PolarizationFrame at_kp = polarization_frame(kp);

  CompensatingRotation out;
  out.m = at_kp.xi * R * at_k.xi.transpose();
  out.gamma = std::atan2(out.m(1, 0), out.m(0, 0));

  // closed forms from first-row matching
  const double kn = k.norm();
  const double rho = std::hypot(k[1], k[2]);
  const double cos_b = rho / kn;
  const double sin_b = k[0] / kn;
  const double cos_bp = std::hypot(kp[1], kp[2]) / kp.norm();
  const double sin_bp = kp[0] / kp.norm();
  double cos_a = 1.0, sin_a = 0.0;
  if (rho > 0.0) {
    cos_a = k[2] / rho;
    sin_a = k[1] / rho;
  }
  if (cos_bp > 1e-12 && cos_b > 1e-12) {
    out.closed_form_valid = true;
    out.cos_gamma_closed = (R(0, 0) - sin_b * sin_bp) / (cos_b * cos_bp);
    out.sin_gamma_closed = -(R(0, 1) * cos_a - R(0, 2) * sin_a) / cos_bp;
  }
  return out;
}

}  // namespace kfock
