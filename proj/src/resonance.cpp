#include "confined_atom/resonance.hpp"

#include <cmath>
#include <stdexcept>

#include "confined_atom/airy.hpp"
#include "confined_atom/bound_state.hpp"
#include "confined_atom/errors.hpp"
#include "confined_atom/numerics.hpp"

namespace confined_atom {
namespace {

constexpr cplx I{0.0, 1.0};

// Pieces of the reduced determinant on the real energy axis, where every
// scaled Airy value is real: d = R + i e^{-2 zeta_p} H.
struct RealSplit {
  double real_part;
  double width_factor;
  double two_zeta_p;
};

RealSplit split_on_real_axis(double energy, const AtomConfig& cfg, double F) {
  const double zpi = 2.0 * cfg.charge() * M_PI;
  const double c = std::cbrt(2.0 * F);
  const cplx p = -scaled_variable(0.0, energy, F);
  const ScaledAiryPair sp = airy_eval_scaled(p);
  const double ap = sp.ai.real(), bp = sp.bi.real(), zp = sp.zeta.real();
  if (cfg.is_isolated()) return {zpi * bp * ap - c, zpi * ap * ap, 2.0 * zp};
  const cplx q = -scaled_variable(-cfg.wall_distance(), energy, F);
  const ScaledAiryPair sq = airy_eval_scaled(q);
  const double ratio = sq.ai.real() / sq.bi.real();
  const double decay = std::exp(-2.0 * (sq.zeta.real() - zp));
  const double inner = ap - decay * bp * ratio;
  return {zpi * bp * inner - c, zpi * ap * inner - c * decay * ratio, 2.0 * zp};
}

ResonanceResult secant(const AtomConfig& cfg, double F, cplx start, double tol, ResonanceResult r) {
  auto d = [&](cplx e) { return reduced_determinant(e, cfg, F); };
  cplx x0 = start;
  cplx x1 = start * (1.0 + 1e-7) + cplx{0.0, -1e-9 * std::abs(start)};
  cplx d0 = d(x0), d1 = d(x1);
  r.converged = false;
  for (int it = 1; it <= 100; ++it) {
    r.iterations = it;
    if (d1 == d0) break;
    cplx step = -d1 * (x1 - x0) / (d1 - d0);
    cplx x2 = x1 + step;
    cplx d2 = d(x2);
    for (int h = 0; h < 30 && std::abs(d2) > std::abs(d1); ++h) {
      step *= 0.5;
      x2 = x1 + step;
      d2 = d(x2);
    }
    x0 = x1;
    d0 = d1;
    x1 = x2;
    d1 = d2;
    if (!std::isfinite(std::abs(d1))) break;
    if (std::abs(step) <= tol * std::max(1.0, std::abs(x1))) {
      r.converged = true;
      break;
    }
  }
  r.energy = x1;
  r.residual = std::abs(d1);
  r.gamma = -2.0 * x1.imag();
  r.log_gamma = r.gamma > 0.0 ? std::log(r.gamma) : -INFINITY;
  if (!(r.gamma >= 0.0)) r.converged = false;
  return r;
}

}  // namespace

cplx scaled_variable(double x, cplx energy, double F) {
  if (!(F > 0.0)) throw std::invalid_argument("static-field scaling undefined");
  return std::cbrt(2.0 / (F * F)) * (F * x + energy);
}

cplx determinant(cplx energy, const AtomConfig& cfg, double F) {
  const double zpi = 2.0 * cfg.charge() * M_PI;
  const double c = std::cbrt(2.0 * F);
  const AiryPair p = airy_eval(-scaled_variable(0.0, energy, F));
  const cplx ci_p = p.bi + I * p.ai;
  if (cfg.is_isolated()) return zpi * ci_p * p.ai - c;
  const AiryPair q = airy_eval(-scaled_variable(-cfg.wall_distance(), energy, F));
  const cplx ci_q = q.bi + I * q.ai;
  return zpi * ci_p * (p.ai * q.bi - p.bi * q.ai) - c * ci_q;
}

cplx reduced_determinant(cplx energy, const AtomConfig& cfg, double F) {
  const double zpi = 2.0 * cfg.charge() * M_PI;
  const double c = std::cbrt(2.0 * F);
  const ScaledAiryPair p = airy_eval_scaled(-scaled_variable(0.0, energy, F));
  const cplx outgoing = p.bi + I * std::exp(-2.0 * p.zeta) * p.ai;
  if (cfg.is_isolated()) return zpi * outgoing * p.ai - c;
  const ScaledAiryPair q = airy_eval_scaled(-scaled_variable(-cfg.wall_distance(), energy, F));
  const cplx ratio = q.ai / q.bi;
  const cplx decay = std::exp(-2.0 * (q.zeta - p.zeta));
  return zpi * outgoing * (p.ai - decay * p.bi * ratio) -
         c * (1.0 + I * std::exp(-2.0 * q.zeta) * ratio);
}

ResonanceResult solve_resonance(const AtomConfig& cfg, double F, std::optional<cplx> guess,
                                double tol) {
  if (!(F > 0.0)) throw std::invalid_argument("static-field scaling undefined");
  const BoundState bs = solve_bound_state(cfg, 1e-15);
  const double eb = bs.energy;
  const double k3 = bs.wave_vector * bs.wave_vector * bs.wave_vector;

  ResonanceResult r;
  r.within_validity = F <= resonance_validity_ratio * k3;
  auto finish = [&](ResonanceResult res) {
    res.stark_shift = res.energy.real() - eb;
    return res;
  };
  if (guess) return finish(secant(cfg, F, *guess, tol, r));

  auto real_part = [&](double e) { return split_on_real_axis(e, cfg, F).real_part; };
  double er = eb;
  const double r0 = real_part(eb);
  if (r0 != 0.0) {
    double delta = std::max(-asymptotic_stark_shift(bs, F), 1e-9 * std::abs(eb));
    bool found = false;
    double lo = eb, hi = eb;
    for (int it = 0; it < 80 && !found; ++it, delta *= 2.0) {
      const double below = eb - delta;
      if (std::signbit(real_part(below)) != std::signbit(r0)) {
        lo = below;
        hi = eb;
        found = true;
        break;
      }
      const double above = eb + std::min(delta, 0.5 * std::abs(eb));
      if (std::signbit(real_part(above)) != std::signbit(r0)) {
        lo = eb;
        hi = above;
        found = true;
      }
    }
    if (!found) {
      const double g = asymptotic_ionization_rate(bs, cfg, F);
      return finish(secant(cfg, F, cplx{eb, -0.5 * g}, tol, r));
    }
    er = find_root_bracketed(real_part, lo, hi, 4e-16 * std::abs(eb));
  }

  // First-order shift off the real axis: Im E = -e^{-2 zeta_p} H / R'.
  const double h = 1e-6 * std::abs(er);
  const double slope = (real_part(er + h) - real_part(er - h)) / (2.0 * h);
  const RealSplit s = split_on_real_axis(er, cfg, F);
  const double ratio = 2.0 * s.width_factor / slope;
  r.converged = ratio > 0.0 && std::isfinite(ratio);
  r.log_gamma = r.converged ? std::log(ratio) - s.two_zeta_p : -INFINITY;
  r.gamma = std::exp(r.log_gamma);
  r.energy = cplx{er, -0.5 * r.gamma};
  r.residual = std::abs(reduced_determinant(r.energy, cfg, F));

  if (r.converged && r.gamma > 1e-8 * std::abs(er)) return finish(secant(cfg, F, r.energy, tol, r));
  return finish(r);
}

double asymptotic_stark_shift(const BoundState& bs, double F) {
  const double k2 = bs.wave_vector * bs.wave_vector;
  return -5.0 * F * F / (8.0 * k2 * k2);
}

double asymptotic_polarizability(const BoundState& bs) {
  const double k2 = bs.wave_vector * bs.wave_vector;
  return 1.25 / (k2 * k2);
}

double asymptotic_ionization_rate(const BoundState& bs, const AtomConfig& cfg, double F) {
  if (F <= 0.0) return 0.0;
  const double k3 = bs.wave_vector * bs.wave_vector * bs.wave_vector;
  return k3 / cfg.charge() * std::exp(-2.0 * k3 / (3.0 * F));
}

double asymptotic_log_ionization_rate(const BoundState& bs, const AtomConfig& cfg, double F) {
  if (F <= 0.0) return -INFINITY;
  const double k3 = bs.wave_vector * bs.wave_vector * bs.wave_vector;
  return std::log(k3 / cfg.charge()) - 2.0 * k3 / (3.0 * F);
}

}  // namespace confined_atom
