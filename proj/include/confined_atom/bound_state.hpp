#pragma once

#include "confined_atom/atom.hpp"
#include "confined_atom/numerics.hpp"
#include "confined_atom/piecewise.hpp"

namespace confined_atom {

// True iff the atom is isolated or 2 Z a > 1.
bool supports_bound_state(const AtomConfig& cfg) noexcept;

// Nonzero root of k/Z = 1 - e^{-2 k a} in (0, Z); k = Z for the isolated atom.
// Throws NoBoundState when 2 Z a <= 1.
BoundState solve_bound_state(const AtomConfig& cfg, double tol = default_root_tolerance);

// u_b(x): zero behind the wall, 2A e^{-ka} sinh(k(x+a)) on (-a, 0) and
// 2A e^{-ka} sinh(ka) e^{-kx} on (0, inf).
double wavefunction(const BoundState& bs, const AtomConfig& cfg, double x);

// Same function as a sum of exponentials, for exact overlap integrals.
Psi1 wavefunction_pieces(const BoundState& bs, const AtomConfig& cfg);

// <u_b|x|u_b>; zero for the isolated atom.
double mean_position(const BoundState& bs, const AtomConfig& cfg);

}  // namespace confined_atom
