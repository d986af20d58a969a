#include "kfock/fock.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kfock {

namespace {

void check_cutoff(int cutoff) {
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
}

}  // namespace

FockState1::FockState1(Eigen::VectorXcd c, int cut) : coeffs(std::move(c)), cutoff(cut) {
  check_cutoff(cutoff);
  if (coeffs.size() != cutoff + 1)
    throw std::invalid_argument("FockState1: coefficient count must equal cutoff + 1");
  if (!coeffs.allFinite()) throw std::invalid_argument("FockState1: non-finite coefficients");
}

FockState1 FockState1::number(int n, int cutoff) {
  check_cutoff(cutoff);
  if (n < 0 || n > cutoff) throw std::invalid_argument("FockState1::number: n out of range");
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(cutoff + 1);
  c[n] = 1.0;
  return FockState1(std::move(c), cutoff);
}

FockState2::FockState2(Eigen::VectorXcd c, int cut) : coeffs(std::move(c)), cutoff(cut) {
  check_cutoff(cutoff);
  if (coeffs.size() != (cutoff + 1) * (cutoff + 1))
    throw std::invalid_argument("FockState2: coefficient count must equal (cutoff + 1)^2");
  if (!coeffs.allFinite()) throw std::invalid_argument("FockState2: non-finite coefficients");
}

FockState2 FockState2::number(int m, int n, int cutoff) {
  check_cutoff(cutoff);
  if (m < 0 || m > cutoff || n < 0 || n > cutoff)
    throw std::invalid_argument("FockState2::number: (m, n) out of range");
  const int dim = (cutoff + 1) * (cutoff + 1);
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
  c[m * (cutoff + 1) + n] = 1.0;
  return FockState2(std::move(c), cutoff);
}

Eigen::MatrixXcd ladder_matrix(LadderKind kind, int cutoff) {
  check_cutoff(cutoff);
  const int dim = cutoff + 1;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  if (kind == LadderKind::create) return a.adjoint();
  return a;
}

Eigen::MatrixXcd ladder_matrix2(Mode mode, LadderKind kind, int cutoff) {
  if (mode == Mode::single)
    throw std::invalid_argument("ladder_matrix2: mode must be H or V");
  const int d = cutoff + 1;
  Eigen::MatrixXcd one = ladder_matrix(kind, cutoff);
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d * d, d * d);
  // index = m*d + n; H acts on m, V acts on n.
  const Eigen::MatrixXcd& left = (mode == Mode::H) ? one : id;
  const Eigen::MatrixXcd& right = (mode == Mode::H) ? id : one;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (left(i, j) != 0.0) out.block(i * d, j * d, d, d) = left(i, j) * right;
  return out;
}

FockState1 apply_ladder(const FockState1& s, const LadderOp& op) {
  if (op.mode != Mode::single)
    throw std::invalid_argument("apply_ladder: 1-mode state takes mode 'single'");
  const int dim = s.dim();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  if (op.kind == LadderKind::annihilate) {
    for (int n = 1; n < dim; ++n) out[n - 1] = std::sqrt(double(n)) * s.coeffs[n];
  } else {
    // component created out of |cutoff> is dropped by the truncation
    for (int n = 0; n + 1 < dim; ++n) out[n + 1] = std::sqrt(double(n + 1)) * s.coeffs[n];
  }
  return FockState1(std::move(out), s.cutoff);
}

FockState2 apply_ladder(const FockState2& s, const LadderOp& op) {
  if (op.mode == Mode::single)
    throw std::invalid_argument("apply_ladder: 2-mode state takes mode H or V");
  const int d = s.modeDim();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.dim());
  const bool onH = (op.mode == Mode::H);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      const Complex c = s.coeffs[m * d + n];
      if (c == 0.0) continue;
      int q = onH ? m : n;
      if (op.kind == LadderKind::annihilate) {
        if (q == 0) continue;
        int mm = onH ? m - 1 : m, nn = onH ? n : n - 1;
        out[mm * d + nn] += std::sqrt(double(q)) * c;
      } else {
        if (q == d - 1) continue;  // dropped at the truncation edge
        int mm = onH ? m + 1 : m, nn = onH ? n : n + 1;
        out[mm * d + nn] += std::sqrt(double(q + 1)) * c;
      }
    }
  }
  return FockState2(std::move(out), s.cutoff);
}

Complex expectation(const FockState1& s, const Eigen::MatrixXcd& op) {
  if (op.rows() != s.dim() || op.cols() != s.dim())
    throw std::invalid_argument("expectation: operator dimension mismatch");
  return s.coeffs.dot(op * s.coeffs);
}

Complex expectation(const FockState2& s, const Eigen::MatrixXcd& op) {
  if (op.rows() != s.dim() || op.cols() != s.dim())
    throw std::invalid_argument("expectation: operator dimension mismatch");
  return s.coeffs.dot(op * s.coeffs);
}

Complex a_expectation(const FockState1& s) {
  Complex acc = 0.0;
  for (int n = 1; n <= s.cutoff; ++n)
    acc += std::conj(s.coeffs[n - 1]) * std::sqrt(double(n)) * s.coeffs[n];
  return acc;
}

double n_expectation(const FockState1& s) {
  double acc = 0.0;
  for (int n = 0; n <= s.cutoff; ++n) acc += double(n) * std::norm(s.coeffs[n]);
  return acc;
}

Complex a_expectation(const FockState2& s, Mode mode) {
  const int d = s.modeDim();
  Complex acc = 0.0;
  if (mode == Mode::H) {
    for (int m = 1; m < d; ++m)
      for (int n = 0; n < d; ++n)
        acc += std::conj(s.coeffs[(m - 1) * d + n]) * std::sqrt(double(m)) * s.coeffs[m * d + n];
  } else if (mode == Mode::V) {
    for (int m = 0; m < d; ++m)
      for (int n = 1; n < d; ++n)
        acc += std::conj(s.coeffs[m * d + n - 1]) * std::sqrt(double(n)) * s.coeffs[m * d + n];
  } else {
    throw std::invalid_argument("a_expectation: mode must be H or V");
  }
  return acc;
}

double n_expectation(const FockState2& s, Mode mode) {
  const int d = s.modeDim();
  double acc = 0.0;
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      acc += double(mode == Mode::H ? m : n) * std::norm(s.coeffs[m * d + n]);
  return acc;
}

FockState1 coherent_state_1(Complex z, int cutoff) {
  check_cutoff(cutoff);
  const double zsq = std::norm(z);
  if (zsq > cutoff / 4.0) {
    std::ostringstream msg;
    msg << "coherent_state_1: |z|^2 = " << zsq << " exceeds cutoff/4 = " << cutoff / 4.0
        << "; need cutoff >= " << int(std::ceil(4.0 * zsq));
    throw std::invalid_argument(msg.str());
  }
  Eigen::VectorXcd c(cutoff + 1);
  c[0] = std::exp(-zsq / 2.0);
  for (int n = 1; n <= cutoff; ++n) c[n] = c[n - 1] * z / std::sqrt(double(n));
  c /= c.norm();
  return FockState1(std::move(c), cutoff);
}

FockState2 coherent_state_2(Complex z, Complex w, int cutoff) {
  FockState1 h = coherent_state_1(z, cutoff);
  FockState1 v = coherent_state_1(w, cutoff);
  const int d = cutoff + 1;
  Eigen::VectorXcd c(d * d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) c[m * d + n] = h.coeffs[m] * v.coeffs[n];
  return FockState2(std::move(c), cutoff);
}

int support_bound(const FockState1& s, double tol) {
  for (int n = s.cutoff; n >= 0; --n)
    if (std::abs(s.coeffs[n]) > tol) return n;
  return -1;
}

int support_bound_total(const FockState2& s, double tol) {
  const int d = s.modeDim();
  int best = -1;
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      if (std::abs(s.coeffs[m * d + n]) > tol) best = std::max(best, m + n);
  return best;
}

Eigen::MatrixXcd mode_rotation_unitary(double gamma, int cutoff) {
  check_cutoff(cutoff);
  Eigen::MatrixXcd aH = ladder_matrix2(Mode::H, LadderKind::annihilate, cutoff);
  Eigen::MatrixXcd aV = ladder_matrix2(Mode::V, LadderKind::annihilate, cutoff);
  Eigen::MatrixXcd gen = gamma * (aH.adjoint() * aV - aV.adjoint() * aH);
  return gen.exp();  // scaling-and-squaring; generator is exactly anti-Hermitian
}

FockState2 apply_unitary(const FockState2& s, const Eigen::MatrixXcd& u) {
  if (u.rows() != s.dim() || u.cols() != s.dim())
    throw std::invalid_argument("apply_unitary: dimension mismatch");
  return FockState2(u * s.coeffs, s.cutoff);
}

std::array<double, 4> stokes_expectations(const FockState2& s) {
  const double nH = n_expectation(s, Mode::H);
  const double nV = n_expectation(s, Mode::V);
  // <a_V^dag a_H> = conj coefficient pattern of S1/S2 cross terms
  const int d = s.modeDim();
  Complex cross = 0.0;  // <a_V^dag a_H>
  for (int m = 1; m < d; ++m)
    for (int n = 0; n + 1 < d; ++n)
      cross += std::conj(s.coeffs[(m - 1) * d + n + 1]) * std::sqrt(double(m)) *
               std::sqrt(double(n + 1)) * s.coeffs[m * d + n];
  const double s1 = 2.0 * cross.real();
  const double s2 = -2.0 * cross.imag();
  return {nH + nV, s1, s2, nH - nV};
}

}  // namespace kfock
