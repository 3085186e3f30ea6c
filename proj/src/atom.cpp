#include "confined_atom/atom.hpp"

#include <cmath>
#include <stdexcept>

namespace confined_atom {

AtomConfig AtomConfig::near_wall(double charge, double wall_distance) {
  if (!(charge > 0.0) || !std::isfinite(charge))
    throw std::invalid_argument("charge Z must be positive and finite");
  if (!(wall_distance > 0.0) || !std::isfinite(wall_distance))
    throw std::invalid_argument("wall distance a must be positive and finite");
  return AtomConfig{charge, wall_distance};
}

AtomConfig AtomConfig::isolated(double charge) {
  if (!(charge > 0.0) || !std::isfinite(charge))
    throw std::invalid_argument("charge Z must be positive and finite");
  return AtomConfig{charge, std::nullopt};
}

double AtomConfig::wall_distance() const {
  if (!wall_distance_) throw std::logic_error("isolated atom has no wall distance");
  return *wall_distance_;
}

void FieldConfig::validate(const BoundState& bs) const {
  if (!(strength >= 0.0)) throw std::invalid_argument("field strength F must be >= 0");
  if (!(omega >= 0.0)) throw std::invalid_argument("frequency omega must be >= 0");
  if (!(eta >= 0.0)) throw std::invalid_argument("broadening eta must be >= 0");
  if (eta == 0.0 && omega >= 0.5 * bs.wave_vector * bs.wave_vector)
    throw std::invalid_argument("eta > 0 required for omega above the ionization threshold");
}

}  // namespace confined_atom
