#pragma once

#include "kfock/state_field.hpp"

#include <complex>

namespace kfock {

/// Event (x0, x) with x0 = ct, all components in length units.
struct SpacetimePoint {
  double x0 = 0.0;
  Vec3 x = Vec3::Zero();
};

/// k_mu x^mu = |k| x0 - k . x, the phase convention fixed library-wide:
/// plane waves enter as e^{-i k_mu x^mu} = e^{i (k.x - |k| x0)}.
double phase(const Vec3& k, const SpacetimePoint& x);

/// Boost along the third axis with rapidity chi.
struct LorentzBoost {
  double chi = 0.0;
};

/// Apply the boost (or its inverse) to an event.
SpacetimePoint boost_point(const LorentzBoost& b, const SpacetimePoint& x);
SpacetimePoint boost_point_inverse(const LorentzBoost& b, const SpacetimePoint& x);

/// phi(x) = 2 Re sum_i w_i (l / N(k_i)) f(k_i) e^{-i k x}.
double classical_field(const ScalarProfile& f, const SpacetimePoint& x,
                       const PhysicalConstants& constants = {});

/// E_cl = hbar c sum_i w_i |k_i| |f(k_i)|^2.
double classical_energy(const ScalarProfile& f, const PhysicalConstants& constants = {});

/// E = hbar c l^3 sum_i w_i |k_i| <n>_i.
double quantum_energy(const ScalarStateField& field);

/// phi(x) = 2 Re sum_i w_i (l^{5/2} / N(k_i)) e^{-i k x} <a>_i.
double field_expectation(const ScalarStateField& field, const SpacetimePoint& x);

/// E - E_cl where E_cl uses the per-node |<a>|^2 in place of |f|^2.
/// Nonnegative up to roundoff for every field (Cauchy-Schwarz).
double energy_inequality_gap(const ScalarStateField& field);

/// Two-point function G(x, y): double quadrature over node pairs of
/// (l^{5/2}/N)(l^{5/2}/N') e^{i k x} e^{-i k' y} q(k, k') where
/// q = conj(<a>_k) <a>_{k'} for distinct nodes (independent oscillators)
/// and q = <a^dag a>_k on the diagonal.
std::complex<double> two_point_function(const ScalarStateField& field,
                                        const SpacetimePoint& x, const SpacetimePoint& y);

/// Energy density e(x): prefactor hbar c l^3 / (2 (2 pi)^3) times the double
/// quadrature with kernel (|k||k'| + k.k') / sqrt(|k||k'|) and the same
/// pair factorization as the two-point function. On box-mode grids its
/// spatial integral over the box reproduces quantum_energy exactly.
double energy_density(const ScalarStateField& field, const SpacetimePoint& x);

/// <probe| [phi_k(x), phi_k(y)] |probe> + 2 i sin(k_mu (x - y)^mu).
/// Vanishes (to roundoff) whenever the probe is supported on number states
/// <= cutoff - 2; errors if the support reaches the truncation edge.
std::complex<double> commutator_check(const Vec3& k, const SpacetimePoint& x,
                                      const SpacetimePoint& y, const FockState1& probe);

/// Rotate a field: nodes move to R k, weights and states are unchanged.
/// The result satisfies field_expectation(field', x) = field_expectation(field, R^-1 x)
/// identically in the quadrature sums.
ScalarStateField rotate_field(const ScalarStateField& field, const Eigen::Matrix3d& R);

/// Rotation expressed on the original grid: psi'_k = psi_{R^T k}. Requires
/// the node set to be closed under R; throws otherwise.
ScalarStateField rotate_field_on_grid(const ScalarStateField& field, const Eigen::Matrix3d& R);

/// Boost along axis 3: nodes move to k' = (k1, k2, k3 cosh chi + |k| sinh chi),
/// states are reattached unchanged, and each weight is rescaled by
/// N(k') / N(k) = sqrt(|k'| / |k|) so that w'/N(k') = w/N(k) per node, which
/// makes phi'(x) = phi(boost^-1 x) hold term by term. The result is an
/// explicit-list grid.
ScalarStateField boost_field(const ScalarStateField& field, const LorentzBoost& boost);

/// Transverse oscillator displacement tracking the wave amplitude:
/// sqrt(2) r l^{-3/2} Re[ f e^{-i k x} ] with r = sqrt(hbar / (m c |k|)).
double oscillator_displacement(std::complex<double> f_at_k, const Vec3& k,
                               const SpacetimePoint& x, double mass,
                               const PhysicalConstants& constants = {});

}  // namespace kfock
