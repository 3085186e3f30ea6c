#include "confined_atom/bound_state.hpp"

#include <cmath>
#include <string>

#include "confined_atom/errors.hpp"

namespace confined_atom {
namespace {

// q = a (Z - k) = Z a e^{-2 k a}; the wall enters every closed form through it.
double wall_overlap(const BoundState& bs, const AtomConfig& cfg) {
  return cfg.wall_distance() * (cfg.charge() - bs.wave_vector);
}

}  // namespace

bool supports_bound_state(const AtomConfig& cfg) noexcept {
  return cfg.is_isolated() || 2.0 * cfg.charge() * *cfg.wall() > 1.0;
}

BoundState solve_bound_state(const AtomConfig& cfg, double tol) {
  const double z = cfg.charge();
  if (cfg.is_isolated()) return {z, -0.5 * z * z, std::sqrt(z)};
  const double a = cfg.wall_distance();
  if (!supports_bound_state(cfg))
    throw NoBoundState("no bound state: Z <= 1/(2a) (Z=" + std::to_string(z) +
                       ", a=" + std::to_string(a) + ")");

  // g(k)/k with g(k) = k/Z - 1 + e^{-2ka}; dividing out the trivial root keeps
  // the bracket clean down to k -> 0, where the quotient tends to 1/Z - 2a < 0.
  auto h = [z, a](double k) { return 1.0 / z + std::expm1(-2.0 * k * a) / k; };
  double lo = std::min(tol, 0.5 * z);
  while (h(lo) >= 0.0 && lo > 1e-300) lo *= 0.5;
  const double k = find_root_bracketed(h, lo, z, tol);

  const double e = std::exp(-2.0 * k * a);
  const double norm2 = k / (1.0 - e * (1.0 + 2.0 * k * a));
  return {k, -0.5 * k * k, std::sqrt(norm2)};
}

double wavefunction(const BoundState& bs, const AtomConfig& cfg, double x) {
  const double k = bs.wave_vector;
  const double amp = bs.norm;
  if (cfg.is_isolated()) return amp * std::exp(-k * std::abs(x));
  const double a = cfg.wall_distance();
  if (x <= -a) return 0.0;
  // 2A e^{-ka} sinh(k(x+a)) = A (e^{kx} - e^{-k(x+2a)})
  if (x < 0.0) return amp * (std::exp(k * x) - std::exp(-k * (x + 2.0 * a)));
  return -amp * std::expm1(-2.0 * k * a) * std::exp(-k * x);
}

Psi1 wavefunction_pieces(const BoundState& bs, const AtomConfig& cfg) {
  const double k = bs.wave_vector;
  const double amp = bs.norm;
  if (cfg.is_isolated())
    return {std::nullopt, ExpPoly({{{amp}, k, 0.0}}), ExpPoly({{{amp}, -k, 0.0}})};
  const double a = cfg.wall_distance();
  ExpPoly inner({{{amp}, k, 0.0}, {{-amp * std::exp(-k * a)}, -k, -a}});
  ExpPoly outer({{{-amp * std::expm1(-2.0 * k * a)}, -k, 0.0}});
  return {a, inner, outer};
}

double mean_position(const BoundState& bs, const AtomConfig& cfg) {
  if (cfg.is_isolated()) return 0.0;
  const double q = wall_overlap(bs, cfg);
  return cfg.wall_distance() * q / (1.0 - 2.0 * q);
}

}  // namespace confined_atom
