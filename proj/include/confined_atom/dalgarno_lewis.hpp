#pragma once

#include "confined_atom/atom.hpp"
#include "confined_atom/piecewise.hpp"

namespace confined_atom {

// D = <u_b| F x |u_b> = F a q / (1 - 2q), q = a (Z - k_b); zero when isolated.
double dipole_coefficient(const BoundState& bs, const AtomConfig& cfg, double F);

// First-order correction for the perturbation -F x:
//   (1/2) psi1'' - (k_b^2/2) psi1 = (D - F x) u_b   off the delta,
// psi1(-a) = 0, continuous at 0 with the delta jump, decaying at +inf, and
// orthogonal to u_b.
Psi1 solve_psi1(const BoundState& bs, const AtomConfig& cfg, double F);

// Second-order energy -alpha F^2 / 2 from the closed form.
double stark_shift_exact(const BoundState& bs, const AtomConfig& cfg, double F);

// Energy through second order, first-order dipole term included:
// -F <x> - alpha F^2 / 2. With a wall <x> > 0, so this is what a field
// actually does to the level at weak F.
double stark_shift_through_second_order(const BoundState& bs, const AtomConfig& cfg, double F);

// Second-order energy from psi1 itself, -F <u_b| x |psi1>, integrated exactly.
// Equals stark_shift_exact.
double stark_shift_from_psi1(const BoundState& bs, const AtomConfig& cfg, const Psi1& psi1,
                             double F);

// Static polarizability. With q = a (Z - k_b) and t = k_b a,
//   alpha = 5/(4k^4) - t^2 q [3t + (1 - 2q)(2 - q)] / (3 k^4 (1 - 2q)^3),
// reducing to 5/(4Z^4) for the isolated atom.
double static_polarizability(const BoundState& bs, const AtomConfig& cfg);

}  // namespace confined_atom
