#pragma once

#include <stdexcept>

namespace kfock {

/// Physical constants and unit choices shared by all field computations.
/// Defaults are natural units. `l` is the unit length that makes field
/// amplitudes dimensionless; `lambda` is the free amplitude scale of the
/// vector potential (see calibrate_lambda_l for how their product is fixed).
struct PhysicalConstants {
  double hbar = 1.0;
  double c = 1.0;
  double epsilon0 = 1.0;
  double l = 1.0;
  double lambda = 1.0;
  double q_el = 1.0;

  void validate() const {
    if (!(hbar > 0 && c > 0 && epsilon0 > 0 && l > 0 && lambda > 0 && q_el > 0))
      throw std::invalid_argument("PhysicalConstants: all constants must be strictly positive");
  }
};

}  // namespace kfock
