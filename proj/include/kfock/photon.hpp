#pragma once

#include "kfock/em_field.hpp"

#include <array>
#include <vector>

namespace kfock {

enum class Polarization { linear_h, circular_plus, circular_minus };

/// Per-node mixing weight rho in [0, 1] and phase for superpositions of a
/// one-photon state with the vacuum. |k| rho(k) must be integrable on the
/// grid for the energy to stay finite in the continuum limit.
struct SinglePhotonSpec {
  std::vector<double> rho;
  std::vector<double> phase;
  Polarization polarization = Polarization::linear_h;

  void validate(const KGrid& grid) const;
};

/// S_i = l^3 sum_i w_i <S_i>_node for the four Stokes operators.
std::array<double, 4> stokes_expectation(const EmStateField& field);

/// Node states: linear   sqrt(rho) e^{i phi} |1,0> + sqrt(1-rho) |0,0>,
///              circular sqrt(rho) e^{i phi} (|1,0> +- i |0,1>)/sqrt(2)
///                       + sqrt(1-rho) |0,0>.
/// Sets *tail_warning (when given) if rho at the largest-|k| node exceeds
/// 1e-3, a sign that the spec does not decay fast enough for a continuum
/// reading.
EmStateField single_photon_field(const SinglePhotonSpec& spec, const KGridPtr& grid, int cutoff,
                                 const PhysicalConstants& constants = {},
                                 bool* tail_warning = nullptr);

/// E = hbar c l^3 sum_i w_i |k_i| rho(k_i).
double single_photon_energy(const SinglePhotonSpec& spec, const KGrid& grid,
                            const PhysicalConstants& constants = {});

struct PhotonSpin {
  double s2 = 0.0;        // +- l^3 integral of rho for circular; 0 for linear
  bool circular = false;  // false flags a linearly polarized spec
};

/// Spin-direction Stokes component of the one-photon field, computed from
/// the spec directly (independently of stokes_expectation).
PhotonSpin photon_spin(const SinglePhotonSpec& spec, const KGrid& grid,
                       const PhysicalConstants& constants = {});

}  // namespace kfock
