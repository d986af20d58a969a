#include "kfock/serialize.hpp"

#include <stdexcept>

namespace kfock {

namespace {

const char* kind_name(GridKind kind) {
  switch (kind) {
    case GridKind::spherical_product: return "spherical-product";
    case GridKind::explicit_list: return "explicit-list";
    case GridKind::box_modes: return "box-modes";
  }
  return "explicit-list";
}

GridKind kind_from_name(const std::string& name) {
  if (name == "spherical-product") return GridKind::spherical_product;
  if (name == "explicit-list") return GridKind::explicit_list;
  if (name == "box-modes") return GridKind::box_modes;
  throw std::invalid_argument("unknown grid kind '" + name + "'");
}

std::vector<Complex> values_from_json(const Json& arr) {
  std::vector<Complex> out;
  out.reserve(arr.size());
  for (const auto& v : arr) out.emplace_back(v.at("re").get<double>(), v.at("im").get<double>());
  return out;
}

Json values_to_json(const std::vector<Complex>& values) {
  Json arr = Json::array();
  for (const auto& z : values) arr.push_back({{"re", z.real()}, {"im", z.imag()}});
  return arr;
}

}  // namespace

Json to_json(const FockState1& s) {
  Json coeffs = Json::array();
  for (int n = 0; n <= s.cutoff; ++n) {
    const Complex c = s.coeffs[n];
    if (c == 0.0) continue;
    coeffs.push_back({{"n", n}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"modes", 1}, {"cutoff", s.cutoff}, {"coeffs", coeffs}};
}

Json to_json(const FockState2& s) {
  Json coeffs = Json::array();
  const int d = s.modeDim();
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      const Complex c = s.coeffs[m * d + n];
      if (c == 0.0) continue;
      coeffs.push_back({{"m", m}, {"n", n}, {"re", c.real()}, {"im", c.imag()}});
    }
  return {{"modes", 2}, {"cutoff", s.cutoff}, {"coeffs", coeffs}};
}

FockState1 fock_state_1_from_json(const Json& j) {
  if (j.at("modes").get<int>() != 1)
    throw std::invalid_argument("fock_state_1_from_json: not a 1-mode record");
  const int cutoff = j.at("cutoff").get<int>();
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(cutoff + 1);
  for (const auto& rec : j.at("coeffs")) {
    const int n = rec.at("n").get<int>();
    if (n < 0 || n > cutoff) throw std::invalid_argument("fock_state_1_from_json: n out of range");
    c[n] = Complex(rec.at("re").get<double>(), rec.at("im").get<double>());
  }
  return FockState1(std::move(c), cutoff);
}

FockState2 fock_state_2_from_json(const Json& j) {
  if (j.at("modes").get<int>() != 2)
    throw std::invalid_argument("fock_state_2_from_json: not a 2-mode record");
  const int cutoff = j.at("cutoff").get<int>();
  const int d = cutoff + 1;
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(d * d);
  for (const auto& rec : j.at("coeffs")) {
    const int m = rec.at("m").get<int>();
    const int n = rec.at("n").get<int>();
    if (m < 0 || m > cutoff || n < 0 || n > cutoff)
      throw std::invalid_argument("fock_state_2_from_json: (m, n) out of range");
    c[m * d + n] = Complex(rec.at("re").get<double>(), rec.at("im").get<double>());
  }
  return FockState2(std::move(c), cutoff);
}

Json to_json(const KGrid& grid) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < grid.size(); ++i)
    nodes.push_back({{"kx", grid.nodes[i][0]},
                     {"ky", grid.nodes[i][1]},
                     {"kz", grid.nodes[i][2]},
                     {"w", grid.weights[i]}});
  Json params = Json::object();
  if (grid.kind == GridKind::box_modes) {
    params["side"] = grid.box_side;
    params["n_max"] = grid.box_nmax;
  }
  return {{"kind", kind_name(grid.kind)}, {"parameters", params}, {"nodes", nodes}};
}

KGridPtr kgrid_from_json(const Json& j) {
  auto grid = std::make_shared<KGrid>();
  grid->kind = kind_from_name(j.at("kind").get<std::string>());
  if (grid->kind == GridKind::box_modes) {
    const Json& params = j.at("parameters");
    grid->box_side = params.at("side").get<double>();
    grid->box_nmax = params.at("n_max").get<int>();
  }
  for (const auto& node : j.at("nodes")) {
    grid->nodes.emplace_back(node.at("kx").get<double>(), node.at("ky").get<double>(),
                             node.at("kz").get<double>());
    grid->weights.push_back(node.at("w").get<double>());
  }
  grid->validate();
  return grid;
}

Json to_json(const ScalarProfile& p) {
  return {{"grid", to_json(*p.grid)}, {"values", values_to_json(p.values)}};
}

Json to_json(const PhotonProfile& p) {
  return {{"grid", to_json(*p.grid)},
          {"values_h", values_to_json(p.h)},
          {"values_v", values_to_json(p.v)}};
}

ScalarProfile scalar_profile_from_json(const Json& j) {
  return ScalarProfile(kgrid_from_json(j.at("grid")), values_from_json(j.at("values")));
}

PhotonProfile photon_profile_from_json(const Json& j) {
  return PhotonProfile(kgrid_from_json(j.at("grid")), values_from_json(j.at("values_h")),
                       values_from_json(j.at("values_v")));
}

}  // namespace kfock
