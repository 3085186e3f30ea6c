#pragma once

#include <complex>
#include <vector>

#include "confined_atom/atom.hpp"
#include "confined_atom/piecewise.hpp"

namespace confined_atom {

// Broadening used for dynamic spectra unless told otherwise.
inline constexpr double default_eta = 0.0018;

enum class Channel { plus, minus };

struct DynamicResponse {
  double omega;
  double eta;
  cplx alpha;
};

// kappa = sqrt(k_b^2 +- 2(omega + i eta)), principal branch (Re kappa > 0).
// Throws NumericalError("on branch cut; increase eta") when Re kappa = 0.
cplx channel_wavevector(const BoundState& bs, double omega, double eta, Channel sign);

// phi'' - kappa^2 phi = -2 F x u_b off the delta, phi(-a) = 0, delta jump at
// the origin, e^{-kappa x} only on the right. Throws std::invalid_argument
// for omega = eta = 0 and for an open channel without broadening.
Psi1 solve_channel(const BoundState& bs, const AtomConfig& cfg, double F, double omega, double eta,
                   Channel sign);

// alpha(omega) = (1/F) [<u_b|x|phi+> + <u_b|x|phi->]; the F-dependence cancels.
// For |omega + i eta| < 0.1 k_b^2 it is summed from its Taylor series about
// zero, with coefficients taken from 32 points on that circle.
cplx dynamic_polarizability(const BoundState& bs, const AtomConfig& cfg, double omega, double eta,
                            double F = 1.0);

std::vector<DynamicResponse> dynamic_spectrum(const BoundState& bs, const AtomConfig& cfg,
                                              const std::vector<double>& omegas, double eta);

}  // namespace confined_atom
