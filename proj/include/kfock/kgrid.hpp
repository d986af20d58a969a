#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <memory>
#include <vector>

namespace kfock {

using Vec3 = Eigen::Vector3d;

enum class GridKind { spherical_product, explicit_list, box_modes };

/// Quadrature rule over wave-vector space: sum_i w_i f(k_i) approximates the
/// integral of f over R^3. All nodes avoid the origin (the measure factors
/// 1/N(k) and 1/|k| used throughout are singular there).
struct KGrid {
  GridKind kind = GridKind::explicit_list;
  std::vector<Vec3> nodes;
  std::vector<double> weights;
  double box_side = 0.0;  // box_modes only
  int box_nmax = 0;       // box_modes only

  std::size_t size() const { return nodes.size(); }
  void validate() const;
};

using KGridPtr = std::shared_ptr<const KGrid>;

/// sqrt((2 pi)^3 * 2 |k|), the relativistic measure factor of the mode
/// expansion. Singular at k = 0.
double normalization_factor(const Vec3& k);

/// Gauss-Legendre nodes/weights on (-1, 1).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Octahedral (Lebedev-style) angular rules. Supported point counts:
/// 6, 14, 26, 38, 50 (exact for spherical polynomials of degree 3, 5, 7,
/// 9, 11 respectively). Weights sum to 4 pi.
void angular_rule(int n, std::vector<Vec3>& dirs, std::vector<double>& weights);

/// Product grid: Gauss-Legendre radial rule mapped to (0, inf) via
/// r = r_scale (1 + t) / (1 - t), times an angular rule with ang_nodes
/// points. Weights include the r^2 Jacobian. Node order is radial-major.
KGridPtr make_spherical_grid(int r_nodes, int ang_nodes, double r_scale = 1.0);

/// Periodic-box modes k = (2 pi / L) n for integer n in [-n_max, n_max]^3
/// minus the origin, each with weight (2 pi / L)^3. Used as the oracle grid
/// on which momentum deltas become exact Kronecker deltas.
KGridPtr make_box_grid(double side, int n_max);

KGridPtr make_explicit_grid(std::vector<Vec3> nodes, std::vector<double> weights);

/// Compensated (Kahan) sum of w_i f(k_i) in ascending node order. Bitwise
/// deterministic for identical inputs.
std::complex<double> integrate(const KGrid& grid,
                               const std::function<std::complex<double>(const Vec3&, std::size_t)>& f);
double integrate_real(const KGrid& grid, const std::function<double(const Vec3&, std::size_t)>& f);

/// FNV-1a hash over the grid's kind, nodes and weights; stable across runs.
std::uint64_t grid_checksum(const KGrid& grid);

}  // namespace kfock
