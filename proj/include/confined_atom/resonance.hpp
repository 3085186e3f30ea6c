#pragma once

#include <complex>
#include <optional>

#include "confined_atom/atom.hpp"

namespace confined_atom {

using cplx = std::complex<double>;

// Quasi-bound state of the atom in a static field F: E = Re - i Gamma/2.
struct ResonanceResult {
  cplx energy;
  double stark_shift = 0.0;  // Re(energy) - eps_b
  double gamma = 0.0;        // -2 Im(energy); may underflow to 0
  double log_gamma = 0.0;    // natural log of gamma, finite even when gamma underflows
  bool converged = false;
  double residual = 0.0;     // |reduced_determinant| at the returned energy
  int iterations = 0;
  bool within_validity = true;  // F <= resonance_validity_ratio * k_b^3
};

inline constexpr double resonance_validity_ratio = 0.3;

// y(x) = (2/F^2)^{1/3} (F x + energy). Throws std::invalid_argument for F <= 0.
cplx scaled_variable(double x, cplx energy, double F);

// Matching condition for an outgoing wave beyond the field turning point:
// 2 Z pi Ci(-alpha) [Ai(-alpha) Bi(-beta) - Bi(-alpha) Ai(-beta)] - (2F)^{1/3} Ci(-beta)
// with alpha = y(0), beta = y(-a). For the isolated atom the wall factor
// drops out: 2 Z pi Ci(-alpha) Ai(-alpha) - (2F)^{1/3}. Limited to Airy
// arguments inside airy_max_argument.
cplx determinant(cplx energy, const AtomConfig& cfg, double F);

// The same condition divided by Bi(-beta) (by nothing for the isolated atom)
// and written with exponentially scaled Airy functions, so it stays finite
// for any field strength. Zeros coincide with those of determinant().
cplx reduced_determinant(cplx energy, const AtomConfig& cfg, double F);

// Resonance near eps_b. Without a guess the real part is bracketed on the
// real axis and the width follows from first-order perturbation of the
// reduced determinant, carried in logarithmic form; a damped complex secant
// then refines the root whenever the width is resolvable in double precision.
// With a guess the secant starts there directly.
ResonanceResult solve_resonance(const AtomConfig& cfg, double F,
                                std::optional<cplx> guess = std::nullopt, double tol = 1e-12);

// -5 F^2 / (8 k_b^4)
double asymptotic_stark_shift(const BoundState& bs, double F);

// 5 / (4 k_b^4), the polarizability implied by the weak-field shift above.
double asymptotic_polarizability(const BoundState& bs);

// (k_b^3 / Z) e^{-2 k_b^3 / (3F)}; 0 at F = 0.
double asymptotic_ionization_rate(const BoundState& bs, const AtomConfig& cfg, double F);

// Its logarithm, finite where the rate itself underflows; -inf at F = 0.
double asymptotic_log_ionization_rate(const BoundState& bs, const AtomConfig& cfg, double F);

}  // namespace confined_atom
