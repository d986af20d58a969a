#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kfock/serialize.hpp"

#include <random>

using namespace kfock;

namespace {

std::mt19937_64 rng(515);
double uniform(double a, double b) {
  return a + (b - a) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace

TEST_CASE("fock state round trips are exact") {
  // shortest round-trip double formatting keeps coefficients bit-identical
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXcd c(7);
    for (int n = 0; n < 7; ++n) c[n] = Complex(uniform(-1, 1), uniform(-1, 1));
    const FockState1 s(c / c.norm(), 6);
    const Json j = to_json(s);
    const FockState1 back = fock_state_1_from_json(Json::parse(j.dump()));
    CHECK(back.cutoff == 6);
    CHECK((back.coeffs - s.coeffs).norm() == 0.0);
  }

  const FockState2 two = coherent_state_2(Complex(0.4, 0.2), Complex(-0.3, 0.1), 6);
  const FockState2 back = fock_state_2_from_json(Json::parse(to_json(two).dump()));
  CHECK((back.coeffs - two.coeffs).norm() == 0.0);
}

TEST_CASE("sparse records omit zeros and restore them") {
  const FockState1 s = FockState1::number(3, 8);
  const Json j = to_json(s);
  CHECK(j.at("coeffs").size() == 1);
  CHECK(j.at("cutoff").get<int>() == 8);
  const FockState1 back = fock_state_1_from_json(j);
  CHECK(back.coeffs[3] == Complex(1.0, 0.0));
  CHECK(back.coeffs[0] == Complex(0.0, 0.0));
}

TEST_CASE("grid serialization preserves kind, parameters and exact values") {
  const KGridPtr box = make_box_grid(2.5, 1);
  const KGridPtr back = kgrid_from_json(Json::parse(to_json(*box).dump()));
  CHECK(back->kind == GridKind::box_modes);
  CHECK(back->box_side == 2.5);
  CHECK(back->box_nmax == 1);
  REQUIRE(back->size() == box->size());
  for (std::size_t i = 0; i < box->size(); ++i) {
    CHECK((back->nodes[i] - box->nodes[i]).norm() == 0.0);
    CHECK(back->weights[i] == box->weights[i]);
  }

  const KGridPtr sph = make_spherical_grid(4, 14, 1.3);
  const KGridPtr sph_back = kgrid_from_json(to_json(*sph));
  CHECK(sph_back->kind == GridKind::spherical_product);
  CHECK(grid_checksum(*sph_back) == grid_checksum(*sph));
}

TEST_CASE("profile round trips") {
  const KGridPtr grid = make_spherical_grid(3, 6, 1.0);
  std::vector<Complex> values;
  for (std::size_t i = 0; i < grid->size(); ++i) values.emplace_back(uniform(-1, 1), uniform(-1, 1));
  const ScalarProfile p(grid, values);
  const ScalarProfile back = scalar_profile_from_json(Json::parse(to_json(p).dump()));
  CHECK(back.values == p.values);

  std::vector<Complex> h = values, v = values;
  std::reverse(v.begin(), v.end());
  const PhotonProfile pp(grid, h, v);
  const PhotonProfile pp_back = photon_profile_from_json(to_json(pp));
  CHECK(pp_back.h == pp.h);
  CHECK(pp_back.v == pp.v);
}

TEST_CASE("malformed records are rejected") {
  CHECK_THROWS_AS(fock_state_1_from_json(Json{{"modes", 2}, {"cutoff", 4}, {"coeffs", Json::array()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      fock_state_1_from_json(Json{
          {"modes", 1}, {"cutoff", 2},
          {"coeffs", Json::array({Json{{"n", 5}, {"re", 1.0}, {"im", 0.0}}})}}),
      std::invalid_argument);
  CHECK_THROWS_AS(kgrid_from_json(Json{{"kind", "nope"}, {"parameters", Json::object()}, {"nodes", Json::array()}}),
                  std::invalid_argument);
}
