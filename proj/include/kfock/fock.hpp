#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace kfock {

using Complex = std::complex<double>;

/// State of a single harmonic oscillator on the number basis truncated at
/// `cutoff`: coeffs[n] is the amplitude of |n>, 0 <= n <= cutoff.
struct FockState1 {
  Eigen::VectorXcd coeffs;
  int cutoff = 0;

  FockState1() = default;
  FockState1(Eigen::VectorXcd c, int cut);

  int dim() const { return cutoff + 1; }
  double norm() const { return coeffs.norm(); }

  /// |n> basis state.
  static FockState1 number(int n, int cutoff);
  static FockState1 vacuum(int cutoff) { return number(0, cutoff); }
};

/// Two-mode (H, V) oscillator state. Basis ordering is row-major in (m, n):
/// index = m * (cutoff + 1) + n, with m the H quanta and n the V quanta.
/// This ordering is fixed library-wide so serialized states are portable.
struct FockState2 {
  Eigen::VectorXcd coeffs;
  int cutoff = 0;

  FockState2() = default;
  FockState2(Eigen::VectorXcd c, int cut);

  int modeDim() const { return cutoff + 1; }
  int dim() const { return (cutoff + 1) * (cutoff + 1); }
  int index(int m, int n) const { return m * (cutoff + 1) + n; }
  double norm() const { return coeffs.norm(); }

  static FockState2 number(int m, int n, int cutoff);
  static FockState2 vacuum(int cutoff) { return number(0, 0, cutoff); }
};

enum class Mode { single, H, V };
enum class LadderKind { annihilate, create };

/// A single ladder operator a, a^dag, a_H, a_H^dag, a_V or a_V^dag.
struct LadderOp {
  Mode mode = Mode::single;
  LadderKind kind = LadderKind::annihilate;
};

/// Matrix of a / a^dag on the truncated 1-mode basis, <n-1|a|n> = sqrt(n).
/// Creation out of |cutoff> is dropped by the truncation.
Eigen::MatrixXcd ladder_matrix(LadderKind kind, int cutoff);

/// Matrix of a ladder operator for mode H or V on the 2-mode basis.
Eigen::MatrixXcd ladder_matrix2(Mode mode, LadderKind kind, int cutoff);

FockState1 apply_ladder(const FockState1& s, const LadderOp& op);
FockState2 apply_ladder(const FockState2& s, const LadderOp& op);

/// <psi|O|psi> for an operator given as a dense matrix on the state's basis.
Complex expectation(const FockState1& s, const Eigen::MatrixXcd& op);
Complex expectation(const FockState2& s, const Eigen::MatrixXcd& op);

/// Fast paths used in quadrature loops (O(dim) instead of O(dim^2)).
Complex a_expectation(const FockState1& s);
double n_expectation(const FockState1& s);
Complex a_expectation(const FockState2& s, Mode mode);
double n_expectation(const FockState2& s, Mode mode);

/// Truncated coherent state |z>: c_n = e^{-|z|^2/2} z^n / sqrt(n!),
/// renormalized to unit norm. Requires |z|^2 <= cutoff / 4; otherwise the
/// dropped tail is no longer negligible and an error names the cutoff that
/// would be needed.
FockState1 coherent_state_1(Complex z, int cutoff);

/// Product of two coherent states, |z> in H and |w> in V.
FockState2 coherent_state_2(Complex z, Complex w, int cutoff);

/// Largest n (or m+n) carrying amplitude above `tol` in absolute value.
int support_bound(const FockState1& s, double tol = 1e-14);
int support_bound_total(const FockState2& s, double tol = 1e-14);

/// Passive rotation of the (a_H, a_V) mode pair by angle gamma:
/// U = exp(gamma (a_H^dag a_V - a_V^dag a_H)), which satisfies
///   U a_H U^dag = cos(gamma) a_H - sin(gamma) a_V
///   U a_V U^dag = sin(gamma) a_H + cos(gamma) a_V
/// exactly on states of total number <= cutoff - 1. The generator preserves
/// total quanta, so U is unitary on the whole truncated space.
Eigen::MatrixXcd mode_rotation_unitary(double gamma, int cutoff);

FockState2 apply_unitary(const FockState2& s, const Eigen::MatrixXcd& u);

/// Per-node Stokes expectations (S0, S1, S2, S3) of a 2-mode state:
/// S0 = n_H + n_V, S1 = a_H^dag a_V + a_V^dag a_H,
/// S2 = i a_V^dag a_H - i a_H^dag a_V, S3 = n_H - n_V.
std::array<double, 4> stokes_expectations(const FockState2& s);

}  // namespace kfock
