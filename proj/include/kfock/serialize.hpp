#pragma once

#include "kfock/fock.hpp"
#include "kfock/kgrid.hpp"
#include "kfock/profile.hpp"

#include <json.hpp>

namespace kfock {

using Json = nlohmann::json;

/// State records: {"modes", "cutoff", "coeffs": [{"n", "re", "im"}...]} for
/// one mode and [{"m", "n", "re", "im"}...] for two. Coefficients are listed
/// in basis order with exact zeros omitted.
Json to_json(const FockState1& s);
Json to_json(const FockState2& s);
FockState1 fock_state_1_from_json(const Json& j);
FockState2 fock_state_2_from_json(const Json& j);

/// Grid: {"kind", "parameters", "nodes": [{"kx","ky","kz","w"}...]}.
Json to_json(const KGrid& grid);
KGridPtr kgrid_from_json(const Json& j);

/// Profiles carry their grid plus tabulated values:
/// scalar {"grid", "values": [{"re","im"}...]},
/// photon {"grid", "values_h": [...], "values_v": [...]}.
Json to_json(const ScalarProfile& p);
Json to_json(const PhotonProfile& p);
ScalarProfile scalar_profile_from_json(const Json& j);
PhotonProfile photon_profile_from_json(const Json& j);

}  // namespace kfock
