#pragma once

#include "kfock/kgrid.hpp"

#include <complex>
#include <vector>

namespace kfock {

/// Complex amplitude function f(k) tabulated on a grid (one value per node).
struct ScalarProfile {
  KGridPtr grid;
  std::vector<std::complex<double>> values;

  ScalarProfile() = default;
  ScalarProfile(KGridPtr g, std::vector<std::complex<double>> v);
  std::size_t size() const { return values.size(); }
};

/// Two-component photon profile (f_H, f_V) tabulated on a grid.
struct PhotonProfile {
  KGridPtr grid;
  std::vector<std::complex<double>> h;
  std::vector<std::complex<double>> v;

  PhotonProfile() = default;
  PhotonProfile(KGridPtr g, std::vector<std::complex<double>> fh,
                std::vector<std::complex<double>> fv);
  std::size_t size() const { return h.size(); }
};

}  // namespace kfock
