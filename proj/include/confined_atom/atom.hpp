#pragma once

#include <optional>

namespace confined_atom {

// A delta-function atom of charge Z, optionally at distance a from a hard
// wall located at x = -a. The isolated atom carries no distance at all, so
// nothing downstream ever evaluates exp(2 k a) with a huge a.
class AtomConfig {
 public:
  static AtomConfig near_wall(double charge, double wall_distance);
  static AtomConfig isolated(double charge);

  double charge() const noexcept { return charge_; }
  bool is_isolated() const noexcept { return !wall_distance_; }
  std::optional<double> wall() const noexcept { return wall_distance_; }

  // Throws std::logic_error for the isolated atom.
  double wall_distance() const;

 private:
  AtomConfig(double charge, std::optional<double> wall_distance)
      : charge_{charge}, wall_distance_{wall_distance} {}

  double charge_;
  std::optional<double> wall_distance_;
};

// Unperturbed ground state: u_b(x) with decay constant k_b, energy -k_b^2/2,
// and amplitude A (u_b = A e^{-k_b |x|} for the isolated atom).
struct BoundState {
  double wave_vector;
  double energy;
  double norm;
};

// Field parameters: static strength F, drive frequency omega and the
// broadening eta added as omega + i eta.
struct FieldConfig {
  double strength = 0.0;
  double omega = 0.0;
  double eta = 0.0;

  // Throws std::invalid_argument when a value is negative or when the drive
  // reaches the continuum (omega >= k_b^2/2) without broadening.
  void validate(const BoundState& bs) const;
};

}  // namespace confined_atom
