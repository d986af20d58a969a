#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace kfock {

/// One invariant check of the verification suite. `measured` is the worst
/// residual observed; the check passes when it stays within `tolerance`.
struct VerificationCheck {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Runs the full desk-scale invariant suite. Deterministic: all randomness
/// is drawn from an internal generator seeded with `seed`, so repeated runs
/// produce identical results bit for bit.
std::vector<VerificationCheck> run_verification(std::uint64_t seed);

nlohmann::json verification_to_json(const std::vector<VerificationCheck>& checks);

}  // namespace kfock
