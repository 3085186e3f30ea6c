#include "confined_atom/airy.hpp"

#include <array>
#include <cmath>

#include "confined_atom/errors.hpp"

namespace confined_atom {
namespace {

using cplxl = std::complex<long double>;

constexpr double pi = M_PI;
constexpr long double ai0 = 0.355028053887817239260063186004183176L;   // Ai(0)
constexpr long double aip0 = 0.258819403792806798405183560189203963L;  // -Ai'(0)
constexpr long double sqrt3 = 1.732050807568877293527446341505872367L;

constexpr int kmax = airy_max_coefficient_index;

struct Coefficients {
  std::array<double, kmax + 1> u{};
  std::array<double, kmax + 1> v{};
};

const Coefficients& coefficients() {
  static const Coefficients table = [] {
    Coefficients c;
    long double u = 1.0L;
    c.u[0] = 1.0;
    c.v[0] = 1.0;
    for (int k = 1; k <= kmax; ++k) {
      u *= (3.0L * k - 0.5L) * (3.0L * k - 1.5L) * (3.0L * k - 2.5L) / (54.0L * k * (k - 0.5L));
      c.u[k] = static_cast<double>(u);
      c.v[k] = static_cast<double>(-(6.0L * k + 1.0L) / (6.0L * k - 1.0L) * u);
    }
    return c;
  }();
  return table;
}

double wrap_angle(double t) {
  if (t > pi) return t - 2.0 * pi;
  if (t <= -pi) return t + 2.0 * pi;
  return t;
}

// z e^{i angle}, with the phase folded back into (-pi, pi].
cplx rotate(cplx z, double angle) { return std::polar(std::abs(z), wrap_angle(std::arg(z) + angle)); }

// Terms c_k zeta^{-k}, cut before the first term that grows.
template <std::size_t N>
int asymptotic_terms(const std::array<double, N>& c, cplx zeta, std::array<cplx, N>& terms) {
  const cplx inv = 1.0 / zeta;
  cplx power = 1.0;
  double previous = INFINITY;
  int count = 0;
  for (int k = 0; k <= kmax; ++k) {
    cplx t = c[k] * power;
    double mag = std::abs(t);
    if (k > 0 && mag > previous) break;
    terms[k] = t;
    count = k + 1;
    if (mag < 1e-17 * std::abs(terms[0])) break;
    previous = mag;
    power *= inv;
  }
  return count;
}

struct AiValue {
  cplx ai;
  cplx ai_prime;
};

// Ai(w) e^{s} and Ai'(w) e^{s} from the asymptotic expansions; |w| large.
AiValue ai_asymptotic_times_exp(cplx w, cplx s) {
  const auto& c = coefficients();
  std::array<cplx, kmax + 1> tu{}, tv{};
  const double sqrt_pi = std::sqrt(pi);
  if (std::abs(std::arg(w)) <= 2.0 * pi / 3.0) {
    const cplx lw = std::log(w);
    const cplx w14 = std::exp(0.25 * lw);
    const cplx zeta = (2.0 / 3.0) * std::exp(1.5 * lw);
    const int nu = asymptotic_terms(c.u, -zeta, tu);
    const int nv = asymptotic_terms(c.v, -zeta, tv);
    cplx su = 0.0, sv = 0.0;
    for (int k = nu - 1; k >= 0; --k) su += tu[k];
    for (int k = nv - 1; k >= 0; --k) sv += tv[k];
    const cplx e = std::exp(s - zeta);
    return {e * su / (2.0 * sqrt_pi * w14), -w14 * e * sv / (2.0 * sqrt_pi)};
  }
  // Oscillatory form about the negative axis: w = -v with |arg v| < pi/3.
  const cplx v = rotate(w, pi);
  const cplx lv = std::log(v);
  const cplx v14 = std::exp(0.25 * lv);
  const cplx zeta = (2.0 / 3.0) * std::exp(1.5 * lv);
  const int nu = asymptotic_terms(c.u, zeta, tu);
  const int nv = asymptotic_terms(c.v, zeta, tv);
  cplx ue = 0.0, uo = 0.0, ve = 0.0, vo = 0.0;
  for (int k = nu - 1; k >= 0; --k) {
    const double sign = (k / 2) % 2 ? -1.0 : 1.0;
    (k % 2 ? uo : ue) += sign * tu[k];
  }
  for (int k = nv - 1; k >= 0; --k) {
    const double sign = (k / 2) % 2 ? -1.0 : 1.0;
    (k % 2 ? vo : ve) += sign * tv[k];
  }
  const cplx i{0.0, 1.0};
  const cplx theta = zeta - 0.25 * pi;
  const cplx ep = std::exp(s + i * theta);
  const cplx em = std::exp(s - i * theta);
  const cplx cos_s = 0.5 * (ep + em);
  const cplx sin_s = (ep - em) / (2.0 * i);
  return {(cos_s * ue + sin_s * uo) / (sqrt_pi * v14), v14 * (sin_s * ve - cos_s * vo) / sqrt_pi};
}

// Bi(z) e^{s}, Bi'(z) e^{s} through Bi(z) = e^{i pi/6} Ai(z w) + e^{-i pi/6} Ai(z conj(w)),
// w = e^{2 pi i/3}.
AiValue bi_asymptotic_times_exp(cplx z, cplx s) {
  const AiValue up = ai_asymptotic_times_exp(rotate(z, 2.0 * pi / 3.0), s);
  const AiValue down = ai_asymptotic_times_exp(rotate(z, -2.0 * pi / 3.0), s);
  const cplx e1 = std::polar(1.0, pi / 6.0);
  const cplx e5 = std::polar(1.0, 5.0 * pi / 6.0);
  return {e1 * up.ai + std::conj(e1) * down.ai, e5 * up.ai_prime + std::conj(e5) * down.ai_prime};
}

// Taylor continuation of an Airy-equation solution w'' = z w from z0 to z1.
AiValue continue_solution(cplx z0, AiValue start, cplx z1, int steps) {
  cplxl w = start.ai;
  cplxl wp = start.ai_prime;
  const cplxl dz = (cplxl(z1) - cplxl(z0)) / static_cast<long double>(steps);
  cplxl zc = z0;
  for (int s = 0; s < steps; ++s) {
    // c_{n+2} (n+2)(n+1) = zc c_n + c_{n-1}
    cplxl cm1 = 0.0L, c0 = w, c1 = wp;
    cplxl val = c0 + c1 * dz;
    cplxl der = c1;
    cplxl tpow = dz;  // dz^{n+1} for the term being added
    cplxl prev = c0;
    cplxl cur = c1;
    for (int n = 0; n < 120; ++n) {
      cplxl next = (zc * prev + cm1) / static_cast<long double>((n + 2) * (n + 1));
      cm1 = prev;
      prev = cur;
      cur = next;
      der += static_cast<long double>(n + 2) * next * tpow;
      tpow *= dz;
      cplxl term = next * tpow;
      val += term;
      if (n > 4 && std::abs(term) < 1e-21L * std::abs(val) &&
          std::abs(next) * std::abs(tpow) < 1e-21L * (std::abs(der) * std::abs(dz) + 1e-300L))
        break;
    }
    w = val;
    wp = der;
    zc += dz;
  }
  return {cplx(w), cplx(wp)};
}

AiryPair from_real_axis(AiryPair p, cplx z) {
  if (z.imag() != 0.0) return p;
  return {p.ai.real(), p.bi.real(), p.ai_prime.real(), p.bi_prime.real()};
}

}  // namespace

namespace detail {

AiryPair airy_series(cplx zd) {
  const cplxl z = zd;
  const cplxl z3 = z * z * z;
  // f = sum 3^k (1/3)_k z^{3k}/(3k)!, g = sum 3^k (2/3)_k z^{3k+1}/(3k+1)!
  cplxl tf = 1.0L, tg = z, tfp = z * z / 2.0L, tgp = 1.0L;
  cplxl f = tf, g = tg, fp = tfp, gp = tgp;
  for (int k = 1; k < 200; ++k) {
    tf *= z3 / static_cast<long double>((3 * k - 1) * (3 * k));
    tg *= z3 / static_cast<long double>((3 * k) * (3 * k + 1));
    tgp *= z3 / static_cast<long double>((3 * k) * (3 * k - 2));
    f += tf;
    g += tg;
    gp += tgp;
    if (k > 1) {
      tfp *= z3 / static_cast<long double>((3 * k - 1) * (3 * k - 3));
      fp += tfp;
    }
    const long double small = 1e-22L;
    if (std::abs(tf) <= small * std::abs(f) && std::abs(tg) <= small * std::abs(g) &&
        std::abs(tfp) <= small * std::abs(fp) && std::abs(tgp) <= small * std::abs(gp) && k > 2)
      break;
  }
  const cplxl ai = ai0 * f - aip0 * g;
  const cplxl bi = sqrt3 * (ai0 * f + aip0 * g);
  const cplxl aip = ai0 * fp - aip0 * gp;
  const cplxl bip = sqrt3 * (ai0 * fp + aip0 * gp);
  return {cplx(ai), cplx(bi), cplx(aip), cplx(bip)};
}

AiryPair airy_asymptotic(cplx z) {
  const AiValue a = ai_asymptotic_times_exp(z, 0.0);
  const AiValue b = bi_asymptotic_times_exp(z, 0.0);
  return {a.ai, b.ai, a.ai_prime, b.ai_prime};
}

}  // namespace detail

AiryPair airy_eval(cplx z) {
  const double r = std::abs(z);
  if (!std::isfinite(r) || r > airy_max_argument)
    throw RangeError("argument out of supported range");
  if (r <= airy_series_radius) return from_real_axis(detail::airy_series(z), z);
  if (r > airy_asymptotic_radius) return from_real_axis(detail::airy_asymptotic(z), z);

  AiryPair p = detail::airy_series(z);
  if (std::abs(std::arg(z)) < pi / 3.0) {
    const cplx z0 = std::polar(airy_asymptotic_radius, std::arg(z));
    const int steps = static_cast<int>(std::ceil((airy_asymptotic_radius - r) / 1.0));
    const AiValue a = continue_solution(z0, ai_asymptotic_times_exp(z0, 0.0), z, std::max(steps, 1));
    p.ai = a.ai;
    p.ai_prime = a.ai_prime;
  }
  return from_real_axis(p, z);
}

cplx airy_ci(cplx z) {
  const AiryPair p = airy_eval(z);
  return p.bi + cplx{0.0, 1.0} * p.ai;
}

cplx airy_ci_prime(cplx z) {
  const AiryPair p = airy_eval(z);
  return p.bi_prime + cplx{0.0, 1.0} * p.ai_prime;
}

double airy_asymptotic_coeffs(int k) {
  if (k < 0 || k > kmax) throw RangeError("coefficient index unsupported");
  return coefficients().u[k];
}

ScaledAiryPair airy_eval_scaled(cplx z) {
  const double r = std::abs(z);
  if (!std::isfinite(r)) throw RangeError("argument out of supported range");
  const cplx zeta = r == 0.0 ? cplx{0.0} : (2.0 / 3.0) * std::exp(1.5 * std::log(z));
  if (r <= airy_asymptotic_radius) {
    const AiryPair p = airy_eval(z);
    const cplx up = std::exp(zeta), down = std::exp(-zeta);
    return {p.ai * up, p.bi * down, p.ai_prime * up, p.bi_prime * down, zeta};
  }
  const AiValue a = ai_asymptotic_times_exp(z, zeta);
  const AiValue b = bi_asymptotic_times_exp(z, -zeta);
  ScaledAiryPair s{a.ai, b.ai, a.ai_prime, b.ai_prime, zeta};
  if (z.imag() == 0.0 && z.real() > 0.0) {
    s.ai = s.ai.real();
    s.bi = s.bi.real();
    s.ai_prime = s.ai_prime.real();
    s.bi_prime = s.bi_prime.real();
  }
  return s;
}

}  // namespace confined_atom
