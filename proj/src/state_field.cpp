#include "kfock/state_field.hpp"

#include <sstream>
#include <stdexcept>

namespace kfock {

namespace {

void check_grid(const KGridPtr& grid) {
  if (!grid) throw std::invalid_argument("state field: null grid");
  grid->validate();
}

template <typename State>
void check_states(const KGridPtr& grid, const std::vector<State>& states) {
  if (states.size() != grid->size())
    throw std::invalid_argument("state field: one state per grid node required");
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (std::abs(states[i].norm() - 1.0) > 1e-12) {
      std::ostringstream msg;
      msg << "state field: node " << i << " state is not normalized (norm = "
          << states[i].norm() << ")";
      throw std::invalid_argument(msg.str());
    }
  }
}

}  // namespace

ScalarProfile::ScalarProfile(KGridPtr g, std::vector<std::complex<double>> v)
    : grid(std::move(g)), values(std::move(v)) {
  check_grid(grid);
  if (values.size() != grid->size())
    throw std::invalid_argument("ScalarProfile: value count must match node count");
  for (const auto& z : values)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("ScalarProfile: non-finite value");
}

PhotonProfile::PhotonProfile(KGridPtr g, std::vector<std::complex<double>> fh,
                             std::vector<std::complex<double>> fv)
    : grid(std::move(g)), h(std::move(fh)), v(std::move(fv)) {
  check_grid(grid);
  if (h.size() != grid->size() || v.size() != grid->size())
    throw std::invalid_argument("PhotonProfile: value count must match node count");
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!std::isfinite(h[i].real()) || !std::isfinite(h[i].imag()) ||
        !std::isfinite(v[i].real()) || !std::isfinite(v[i].imag()))
      throw std::invalid_argument("PhotonProfile: non-finite value");
}

void ScalarStateField::validate() const {
  check_grid(grid);
  constants.validate();
  check_states(grid, states);
}

void EmStateField::validate() const {
  check_grid(grid);
  constants.validate();
  check_states(grid, states);
}

ScalarStateField coherent_field(const ScalarProfile& profile, int cutoff,
                                const PhysicalConstants& constants) {
  constants.validate();
  ScalarStateField field;
  field.grid = profile.grid;
  field.constants = constants;
  field.states.reserve(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    try {
      field.states.push_back(coherent_state_1(profile.values[i], cutoff));
    } catch (const std::invalid_argument& e) {
      std::ostringstream msg;
      msg << "coherent_field: node " << i << ": " << e.what();
      throw std::invalid_argument(msg.str());
    }
  }
  return field;
}

EmStateField coherent_field(const PhotonProfile& profile, int cutoff,
                            const PhysicalConstants& constants) {
  constants.validate();
  EmStateField field;
  field.grid = profile.grid;
  field.constants = constants;
  field.states.reserve(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    try {
      field.states.push_back(coherent_state_2(profile.h[i], profile.v[i], cutoff));
    } catch (const std::invalid_argument& e) {
      std::ostringstream msg;
      msg << "coherent_field: node " << i << ": " << e.what();
      throw std::invalid_argument(msg.str());
    }
  }
  return field;
}

ScalarStateField number_field(const KGridPtr& grid, int n, int cutoff,
                              const PhysicalConstants& constants) {
  check_grid(grid);
  constants.validate();
  ScalarStateField field;
  field.grid = grid;
  field.constants = constants;
  field.states.assign(grid->size(), FockState1::number(n, cutoff));
  return field;
}

EmStateField number_field_2(const KGridPtr& grid, int m, int n, int cutoff,
                            const PhysicalConstants& constants) {
  check_grid(grid);
  constants.validate();
  EmStateField field;
  field.grid = grid;
  field.constants = constants;
  field.states.assign(grid->size(), FockState2::number(m, n, cutoff));
  return field;
}

}  // namespace kfock
