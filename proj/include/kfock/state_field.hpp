#pragma once

#include "kfock/constants.hpp"
#include "kfock/fock.hpp"
#include "kfock/kgrid.hpp"
#include "kfock/profile.hpp"

#include <vector>

namespace kfock {

/// Wave-vector-indexed oscillator wave function: one normalized 1-mode state
/// per grid node.
struct ScalarStateField {
  KGridPtr grid;
  std::vector<FockState1> states;
  PhysicalConstants constants;

  std::size_t size() const { return states.size(); }
  void validate() const;
};

/// Same with one 2-mode (H, V) state per node.
struct EmStateField {
  KGridPtr grid;
  std::vector<FockState2> states;
  PhysicalConstants constants;

  std::size_t size() const { return states.size(); }
  void validate() const;
};

/// Coherent field: node i carries the coherent state of amplitude F(k_i).
/// The profile is the dimensionless F (F = f / l^{3/2}); the truncation
/// guard is applied per node and errors name the offending node.
ScalarStateField coherent_field(const ScalarProfile& profile, int cutoff,
                                const PhysicalConstants& constants = {});
EmStateField coherent_field(const PhotonProfile& profile, int cutoff,
                            const PhysicalConstants& constants = {});

/// Every node carrying the same number state.
ScalarStateField number_field(const KGridPtr& grid, int n, int cutoff,
                              const PhysicalConstants& constants = {});
EmStateField number_field_2(const KGridPtr& grid, int m, int n, int cutoff,
                            const PhysicalConstants& constants = {});

}  // namespace kfock
