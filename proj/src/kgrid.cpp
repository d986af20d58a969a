#include "kfock/kgrid.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace kfock {

namespace {

constexpr double kPi = std::numbers::pi;

struct KahanAccumulator {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

// Octahedral point families. `a1` = 6 axis points, `a2` = 12 edge midpoints,
// `a3` = 8 cube corners, `pq0` = 24 points (p, q, 0) with p^2 + q^2 = 1,
// `llm` = 24 points (l, l, m) with 2 l^2 + m^2 = 1.
void emit_a1(std::vector<Vec3>& d, std::vector<double>& w, double wt) {
  for (int axis = 0; axis < 3; ++axis)
    for (int sgn : {1, -1}) {
      Vec3 v = Vec3::Zero();
      v[axis] = sgn;
      d.push_back(v);
      w.push_back(wt);
    }
}

void emit_a2(std::vector<Vec3>& d, std::vector<double>& w, double wt) {
  const double s = 1.0 / std::sqrt(2.0);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      for (int sa : {1, -1})
        for (int sb : {1, -1}) {
          Vec3 v = Vec3::Zero();
          v[a] = sa * s;
          v[b] = sb * s;
          d.push_back(v);
          w.push_back(wt);
        }
}

void emit_a3(std::vector<Vec3>& d, std::vector<double>& w, double wt) {
  const double s = 1.0 / std::sqrt(3.0);
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1}) {
        d.push_back(Vec3(sx * s, sy * s, sz * s));
        w.push_back(wt);
      }
}

void emit_pq0(std::vector<Vec3>& d, std::vector<double>& w, double p, double wt) {
  const double q = std::sqrt(1.0 - p * p);
  // all permutations of (+-p, +-q, 0)
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      for (int sa : {1, -1})
        for (int sb : {1, -1}) {
          Vec3 v = Vec3::Zero();
          v[a] = sa * p;
          v[b] = sb * q;
          d.push_back(v);
          w.push_back(wt);
        }
    }
}

void emit_llm(std::vector<Vec3>& d, std::vector<double>& w, double l, double wt) {
  const double m = std::sqrt(1.0 - 2.0 * l * l);
  // all placements of the distinct component m among the three axes
  for (int axis = 0; axis < 3; ++axis)
    for (int sm : {1, -1})
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          Vec3 v;
          int other[2], idx = 0;
          for (int i = 0; i < 3; ++i)
            if (i != axis) other[idx++] = i;
          v[axis] = sm * m;
          v[other[0]] = s1 * l;
          v[other[1]] = s2 * l;
          d.push_back(v);
          w.push_back(wt);
        }
}

}  // namespace

void KGrid::validate() const {
  if (nodes.empty()) throw std::invalid_argument("KGrid: node count must be >= 1");
  if (nodes.size() != weights.size())
    throw std::invalid_argument("KGrid: node/weight count mismatch");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!(nodes[i].norm() > 0.0)) {
      std::ostringstream msg;
      msg << "KGrid: node " << i << " is at the origin (|k| must be > 0)";
      throw std::invalid_argument(msg.str());
    }
    if (!(weights[i] > 0.0)) {
      std::ostringstream msg;
      msg << "KGrid: weight " << i << " must be strictly positive";
      throw std::invalid_argument(msg.str());
    }
    if (!nodes[i].allFinite() || !std::isfinite(weights[i]))
      throw std::invalid_argument("KGrid: non-finite node or weight");
  }
}

double normalization_factor(const Vec3& k) {
  const double kn = k.norm();
  if (!(kn > 0.0)) throw std::domain_error("normalization_factor: |k| must be > 0");
  return std::sqrt(std::pow(2.0 * kPi, 3) * 2.0 * kn);
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  // Newton iteration on P_n; roots are symmetric about 0.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

void angular_rule(int n, std::vector<Vec3>& dirs, std::vector<double>& weights) {
  dirs.clear();
  weights.clear();
  switch (n) {
    case 6:
      emit_a1(dirs, weights, 1.0 / 6.0);
      break;
    case 14:
      emit_a1(dirs, weights, 1.0 / 15.0);
      emit_a3(dirs, weights, 3.0 / 40.0);
      break;
    case 26:
      emit_a1(dirs, weights, 1.0 / 21.0);
      emit_a2(dirs, weights, 4.0 / 105.0);
      emit_a3(dirs, weights, 27.0 / 840.0);
      break;
    case 38:
      emit_a1(dirs, weights, 1.0 / 105.0);
      emit_a3(dirs, weights, 9.0 / 280.0);
      emit_pq0(dirs, weights, 0.4597008433809831, 1.0 / 35.0);
      break;
    case 50:
      emit_a1(dirs, weights, 0.0126984126984127);
      emit_a2(dirs, weights, 0.02257495590828924);
      emit_a3(dirs, weights, 0.02109375);
      emit_llm(dirs, weights, 0.3015113445777636, 0.02017333553791887);
      break;
    default: {
      std::ostringstream msg;
      msg << "angular_rule: unsupported point count " << n
          << " (supported: 6, 14, 26, 38, 50)";
      throw std::invalid_argument(msg.str());
    }
  }
  for (double& w : weights) w *= 4.0 * kPi;
}

KGridPtr make_spherical_grid(int r_nodes, int ang_nodes, double r_scale) {
  if (r_nodes < 2) throw std::invalid_argument("make_spherical_grid: r_nodes must be >= 2");
  if (ang_nodes < 6) throw std::invalid_argument("make_spherical_grid: ang_nodes must be >= 6");
  if (!(r_scale > 0.0)) throw std::invalid_argument("make_spherical_grid: r_scale must be > 0");

  std::vector<double> t, tw;
  gauss_legendre(r_nodes, t, tw);
  std::vector<Vec3> dirs;
  std::vector<double> dw;
  angular_rule(ang_nodes, dirs, dw);

  auto grid = std::make_shared<KGrid>();
  grid->kind = GridKind::spherical_product;
  grid->nodes.reserve(std::size_t(r_nodes) * ang_nodes);
  grid->weights.reserve(std::size_t(r_nodes) * ang_nodes);
  for (int i = 0; i < r_nodes; ++i) {
    const double r = r_scale * (1.0 + t[i]) / (1.0 - t[i]);
    const double jac = r_scale * 2.0 / ((1.0 - t[i]) * (1.0 - t[i]));
    const double radial_w = tw[i] * jac * r * r;
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      grid->nodes.push_back(r * dirs[j]);
      grid->weights.push_back(radial_w * dw[j]);
    }
  }
  grid->validate();
  return grid;
}

KGridPtr make_box_grid(double side, int n_max) {
  if (!(side > 0.0)) throw std::invalid_argument("make_box_grid: side must be > 0");
  if (n_max < 1) throw std::invalid_argument("make_box_grid: n_max must be >= 1");
  const double dk = 2.0 * kPi / side;
  const double w = dk * dk * dk;
  auto grid = std::make_shared<KGrid>();
  grid->kind = GridKind::box_modes;
  grid->box_side = side;
  grid->box_nmax = n_max;
  for (int n1 = -n_max; n1 <= n_max; ++n1)
    for (int n2 = -n_max; n2 <= n_max; ++n2)
      for (int n3 = -n_max; n3 <= n_max; ++n3) {
        if (n1 == 0 && n2 == 0 && n3 == 0) continue;
        grid->nodes.push_back(dk * Vec3(n1, n2, n3));
        grid->weights.push_back(w);
      }
  grid->validate();
  return grid;
}

KGridPtr make_explicit_grid(std::vector<Vec3> nodes, std::vector<double> weights) {
  auto grid = std::make_shared<KGrid>();
  grid->kind = GridKind::explicit_list;
  grid->nodes = std::move(nodes);
  grid->weights = std::move(weights);
  grid->validate();
  return grid;
}

std::complex<double> integrate(const KGrid& grid,
                               const std::function<std::complex<double>(const Vec3&, std::size_t)>& f) {
  KahanAccumulator re, im;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::complex<double> v = grid.weights[i] * f(grid.nodes[i], i);
    re.add(v.real());
    im.add(v.imag());
  }
  return {re.sum, im.sum};
}

double integrate_real(const KGrid& grid, const std::function<double(const Vec3&, std::size_t)>& f) {
  KahanAccumulator acc;
  for (std::size_t i = 0; i < grid.size(); ++i) acc.add(grid.weights[i] * f(grid.nodes[i], i));
  return acc.sum;
}

std::uint64_t grid_checksum(const KGrid& grid) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const void* p, std::size_t n) {
    const unsigned char* b = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= b[i];
      h *= 1099511628211ull;
    }
  };
  const int kind = int(grid.kind);
  mix(&kind, sizeof kind);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double v[4] = {grid.nodes[i][0], grid.nodes[i][1], grid.nodes[i][2], grid.weights[i]};
    mix(v, sizeof v);
  }
  return h;
}

}  // namespace kfock
