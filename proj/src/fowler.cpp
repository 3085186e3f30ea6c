#include "confined_atom/fowler.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "confined_atom/bound_state.hpp"
#include "confined_atom/dalgarno_lewis.hpp"
#include "confined_atom/errors.hpp"

namespace confined_atom {

cplx channel_wavevector(const BoundState& bs, double omega, double eta, Channel sign) {
  const double k = bs.wave_vector;
  const double s = sign == Channel::plus ? 1.0 : -1.0;
  const cplx kappa = std::sqrt(cplx{k * k + 2.0 * s * omega, 2.0 * s * eta});
  if (kappa.real() == 0.0) throw NumericalError("on branch cut; increase eta");
  return kappa;
}

namespace {

// Solves the channel at complex frequency z without the sign checks, which
// the circle sampling below needs.
Psi1 solve_channel_at(const BoundState& bs, const AtomConfig& cfg, double F, cplx z, Channel sign) {
  const double k = bs.wave_vector;
  const cplx kappa = std::sqrt(k * k + (sign == Channel::plus ? 2.0 : -2.0) * z);
  if (kappa.real() == 0.0) throw NumericalError("on branch cut; increase eta");
  const Psi1 u = wavefunction_pieces(bs, cfg);
  const std::vector<cplx> source{0.0, -2.0 * F};
  return solve_piecewise(cfg, kappa, u.inner.times_polynomial(source),
                         u.outer.times_polynomial(source), OriginCondition::delta_jump);
}

cplx channel_sum(const BoundState& bs, const AtomConfig& cfg, cplx z, double F) {
  const Psi1 u = wavefunction_pieces(bs, cfg);
  const Psi1 plus = solve_channel_at(bs, cfg, F, z, Channel::plus);
  const Psi1 minus = solve_channel_at(bs, cfg, F, z, Channel::minus);
  return (overlap(u, plus, 1) + overlap(u, minus, 1)) / F;
}

// Close to z = 0 the particular solutions carry coefficients of order
// 1/(k_b^2 - kappa^2)^2 that cancel against the homogeneous part, costing
// about (k_b^2/|z|)^2 ulps. Inside this radius (units of k_b^2) alpha is
// summed from its Taylor series instead; alpha is even in z and analytic
// for |z| < k_b^2/2, so the coefficients come from samples on the circle.
constexpr double near_static_radius = 0.1;
constexpr int circle_points = 32;

cplx near_static(const BoundState& bs, const AtomConfig& cfg, cplx z, double F) {
  const double r = near_static_radius * bs.wave_vector * bs.wave_vector;
  constexpr int half = circle_points / 2;
  std::array<cplx, half> samples;
  for (int m = 0; m < half; ++m)
    samples[m] = channel_sum(bs, cfg, std::polar(r, 2.0 * std::numbers::pi * m / circle_points), F);
  // b_j = (1/M) sum_m alpha(r e^{i t_m}) e^{-2ij t_m}; evenness folds the
  // second half of the circle onto the first
  const cplx w = (z / r) * (z / r);
  cplx sum = 0.0, power = 1.0;
  for (int j = 0; j < half; ++j) {
    cplx b = 0.0;
    for (int m = 0; m < half; ++m)
      b += samples[m] * std::polar(1.0, -2.0 * std::numbers::pi * 2.0 * j * m / circle_points);
    b /= static_cast<double>(half);
    if (j == 0) b = static_polarizability(bs, cfg);
    sum += b * power;
    power *= w;
  }
  return sum;
}

}  // namespace

Psi1 solve_channel(const BoundState& bs, const AtomConfig& cfg, double F, double omega, double eta,
                   Channel sign) {
  if (omega < 0.0 || eta < 0.0) throw std::invalid_argument("omega and eta must be >= 0");
  if (omega == 0.0 && eta == 0.0)
    throw std::invalid_argument("degenerate channel: use static module");
  if (sign == Channel::minus && eta == 0.0 && omega >= 0.5 * bs.wave_vector * bs.wave_vector)
    throw std::invalid_argument("open channel needs eta > 0");
  channel_wavevector(bs, omega, eta, sign);
  return solve_channel_at(bs, cfg, F, cplx{omega, eta}, sign);
}

cplx dynamic_polarizability(const BoundState& bs, const AtomConfig& cfg, double omega, double eta,
                            double F) {
  if (!(F > 0.0)) throw std::invalid_argument("probe field F must be positive");
  const cplx z{omega, eta};
  const double r = near_static_radius * bs.wave_vector * bs.wave_vector;
  if (omega < 0.0 || eta < 0.0 || z == 0.0 || std::abs(z) >= r) {
    // validation and error messages of the public channel solver
    const Psi1 u = wavefunction_pieces(bs, cfg);
    const Psi1 plus = solve_channel(bs, cfg, F, omega, eta, Channel::plus);
    const Psi1 minus = solve_channel(bs, cfg, F, omega, eta, Channel::minus);
    return (overlap(u, plus, 1) + overlap(u, minus, 1)) / F;
  }
  return near_static(bs, cfg, z, F);
}

std::vector<DynamicResponse> dynamic_spectrum(const BoundState& bs, const AtomConfig& cfg,
                                              const std::vector<double>& omegas, double eta) {
  std::vector<DynamicResponse> out;
  out.reserve(omegas.size());
  for (double w : omegas) out.push_back({w, eta, dynamic_polarizability(bs, cfg, w, eta)});
  return out;
}

}  // namespace confined_atom
