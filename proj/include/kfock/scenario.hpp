#pragma once

#include "kfock/em_field.hpp"
#include "kfock/photon.hpp"
#include "kfock/scalar_field.hpp"
#include "kfock/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kfock {

struct ScenarioRequest {
  std::string type;  // field-eval | energy | stokes | calibrate | covariance | appendix-b | verify
  Json params;
};

enum class FieldKind {
  none,
  scalar_coherent,
  scalar_number,
  scalar_explicit,
  em_coherent,
  em_number,
  em_explicit,
  single_photon
};

/// A parsed, validated scenario: constants, grid, one field description and
/// an ordered request list. All invariants are checked eagerly at parse
/// time; errors name the offending JSON field or node index.
struct Scenario {
  int schema = 1;
  std::uint64_t seed = 0;
  PhysicalConstants constants;
  int cutoff = 16;
  KGridPtr grid;

  FieldKind field_kind = FieldKind::none;
  ScalarProfile scalar_profile;
  PhotonProfile photon_profile;
  int number_m = 0, number_n = 0;
  SinglePhotonSpec photon_spec;
  std::vector<FockState1> explicit_states_1;
  std::vector<FockState2> explicit_states_2;

  std::vector<ScenarioRequest> requests;

  bool is_scalar() const {
    return field_kind == FieldKind::scalar_coherent || field_kind == FieldKind::scalar_number ||
           field_kind == FieldKind::scalar_explicit;
  }
  bool is_em() const { return field_kind != FieldKind::none && !is_scalar(); }
};

Scenario parse_scenario(const std::string& text);
Scenario parse_scenario_json(const Json& j);

struct ResultRecord {
  int id = 0;
  std::string request;
  Json payload;
  std::uint64_t grid_checksum = 0;
  double elapsed_seconds = 0.0;  // reported on stderr only; kept out of the
                                 // serialized payload so outputs are
                                 // byte-reproducible
  bool passed = true;            // informational requests always pass
};

struct RunOptions {
  std::optional<std::string> request_filter;   // run only requests of this type;
                                               // synthesizes a default request
                                               // if the scenario has none
  std::optional<std::uint64_t> seed_override;
};

std::vector<ResultRecord> run(const Scenario& scenario, const RunOptions& options = {});

bool all_passed(const std::vector<ResultRecord>& results);
Json results_to_json(const std::vector<ResultRecord>& results, std::uint64_t seed_used);

/// CSV rows of the field-eval tables: header x0,x1,x2,x3,phi for scalar
/// fields, x0,x1,x2,x3,A1,A2,A3,E1,E2,E3,B1,B2,B3 for photon fields.
std::string results_to_csv(const std::vector<ResultRecord>& results);

}  // namespace kfock
