#pragma once

#include "kfock/kgrid.hpp"

#include <Eigen/Dense>

namespace kfock {

/// Rotation frame attached to a wave vector: Xi(k) rotates k onto the
/// positive third axis (Xi k = |k| e3). The first two rows are the
/// polarization vectors; the third row is k / |k|, so (eps_h, eps_v, k/|k|)
/// is a right-handed orthonormal triad.
struct PolarizationFrame {
  Eigen::Matrix3d xi;
  Vec3 eps_h;
  Vec3 eps_v;
  Vec3 k;
};

/// Build Xi(k) as a rotation about axis 1 (eliminating component 2)
/// followed by a rotation about axis 2 (eliminating component 1).
/// On the singular ray k2 = k3 = 0 the first angle is taken to be 0, which
/// is the continuous limit along k2 -> 0 with k3 > 0. Throws on k = 0.
PolarizationFrame polarization_frame(const Vec3& k);

/// The rotation about axis 3 satisfying Xi(R k) R = M Xi(k). `gamma` is
/// extracted from the matrix entries via atan2(M21, M11). The closed-form
/// (cos gamma, sin gamma) obtained from first-row matching is provided as a
/// cross-check; it degenerates when cos(beta') = 0 (R k on the singular
/// ray), in which case closed_form_valid is false.
struct CompensatingRotation {
  Eigen::Matrix3d m;
  double gamma = 0.0;
  bool closed_form_valid = false;
  double cos_gamma_closed = 0.0;
  double sin_gamma_closed = 0.0;
};

CompensatingRotation compensating_rotation(const Eigen::Matrix3d& R, const Vec3& k);

}  // namespace kfock
