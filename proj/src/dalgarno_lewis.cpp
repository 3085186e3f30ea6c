#include "confined_atom/dalgarno_lewis.hpp"

#include <cmath>

#include "confined_atom/bound_state.hpp"

namespace confined_atom {

double dipole_coefficient(const BoundState& bs, const AtomConfig& cfg, double F) {
  return F * mean_position(bs, cfg);
}

Psi1 solve_psi1(const BoundState& bs, const AtomConfig& cfg, double F) {
  const Psi1 u = wavefunction_pieces(bs, cfg);
  const double d = dipole_coefficient(bs, cfg, F);
  const std::vector<cplx> source{2.0 * d, -2.0 * F};
  const double k = bs.wave_vector;
  return solve_piecewise(cfg, k, u.inner.times_polynomial(source), u.outer.times_polynomial(source),
                         OriginCondition::orthogonal_to_ground, &u);
}

double stark_shift_exact(const BoundState& bs, const AtomConfig& cfg, double F) {
  return -0.5 * static_polarizability(bs, cfg) * F * F;
}

double stark_shift_through_second_order(const BoundState& bs, const AtomConfig& cfg, double F) {
  return -dipole_coefficient(bs, cfg, F) + stark_shift_exact(bs, cfg, F);
}

double stark_shift_from_psi1(const BoundState& bs, const AtomConfig& cfg, const Psi1& psi1,
                             double F) {
  return -F * overlap(wavefunction_pieces(bs, cfg), psi1, 1).real();
}

double static_polarizability(const BoundState& bs, const AtomConfig& cfg) {
  const double k = bs.wave_vector;
  const double k4 = k * k * k * k;
  if (cfg.is_isolated()) return 1.25 / k4;
  const double z = cfg.charge();
  const double a = cfg.wall_distance();
  const double q = a * (z - k);
  // 1 - 2q written to avoid cancellation close to the threshold 2 Z a = 1
  const double s = (1.0 - 2.0 * a * z) + 2.0 * a * k;
  const double t = k * a;
  return 1.25 / k4 - t * t * q * (3.0 * t + s * (2.0 - q)) / (3.0 * k4 * s * s * s);
}

}  // namespace confined_atom
