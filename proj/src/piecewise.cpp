#include "confined_atom/piecewise.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "confined_atom/errors.hpp"

namespace confined_atom {
namespace {

cplx horner(const std::vector<cplx>& p, double x) {
  cplx s = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * x + *it;
  return s;
}

std::vector<cplx> derivative_coeffs(const std::vector<cplx>& p) {
  std::vector<cplx> d;
  for (std::size_t j = 1; j < p.size(); ++j) d.push_back(p[j] * static_cast<double>(j));
  return d;
}

std::vector<cplx> multiply(const std::vector<cplx>& p, const std::vector<cplx>& q) {
  if (p.empty() || q.empty()) return {};
  std::vector<cplx> r(p.size() + q.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

// Coefficients of p(x0 + t) in t.
std::vector<cplx> taylor_shift(std::vector<cplx> c, double x0) {
  const std::size_t n = c.size();
  if (n < 2 || x0 == 0.0) return c;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) c[j] += x0 * c[j + 1];
  return c;
}

// Integral of t^j e^{-mu t} over [0, width]; Re(mu) >= 0 is expected.
cplx moment(int j, cplx mu, double width) {
  double jfact = std::tgamma(j + 1.0);
  if (std::isinf(width)) {
    if (!(mu.real() > 0.0)) throw NumericalError("divergent integral");
    return jfact / std::pow(mu, j + 1);
  }
  const cplx z = mu * width;
  const double wj = std::pow(width, j + 1);
  const double az = std::abs(z);
  if (az <= 1.0) {
    cplx sum = 0.0;
    cplx power = 1.0;
    for (int n = 0; n < 60; ++n) {
      cplx term = power / (j + n + 1.0);
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
      power *= -z / (n + 1.0);
    }
    return wj * sum;
  }
  if (az < 40.0 && std::abs(std::arg(z)) <= 0.25 * M_PI) {
    // e^{-z} j! sum z^n / (j+1+n)!, free of cancellation for z near the real axis
    cplx sum = 0.0;
    cplx term = 1.0 / std::tgamma(j + 2.0);
    for (int n = 0; n < 400; ++n) {
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
      term *= z / (j + n + 2.0);
    }
    return std::exp(-z) * wj * jfact * sum;
  }
  cplx partial = 0.0;
  cplx power = 1.0;
  for (int i = 0; i <= j; ++i) {
    partial += power;
    power *= z / (i + 1.0);
  }
  return jfact / std::pow(mu, j + 1) * (1.0 - std::exp(-z) * partial);
}

// Integral of p(x) e^{r (x - x0)} over [lo, hi], x0 being lo or hi.
cplx integrate_term(const std::vector<cplx>& p, cplx r, double lo, double hi, bool anchor_low) {
  const double width = hi - lo;
  cplx total = 0.0;
  if (anchor_low) {
    auto q = taylor_shift(p, lo);
    for (std::size_t j = 0; j < q.size(); ++j)
      if (q[j] != 0.0) total += q[j] * moment(static_cast<int>(j), -r, width);
  } else {
    auto q = taylor_shift(p, hi);
    for (std::size_t j = 0; j < q.size(); ++j)
      if (q[j] != 0.0) total += q[j] * (j % 2 ? -1.0 : 1.0) * moment(static_cast<int>(j), r, width);
  }
  return total;
}

bool is_zero(const std::vector<cplx>& p) {
  for (const auto& c : p)
    if (c != 0.0) return false;
  return true;
}

}  // namespace

ExpPoly::ExpPoly(std::vector<ExpPolyTerm> terms) {
  for (const auto& t : terms) add(t);
}

void ExpPoly::add(const ExpPolyTerm& term) {
  for (auto& t : terms_) {
    if (t.rate == term.rate && t.anchor == term.anchor) {
      if (t.poly.size() < term.poly.size()) t.poly.resize(term.poly.size(), 0.0);
      for (std::size_t j = 0; j < term.poly.size(); ++j) t.poly[j] += term.poly[j];
      return;
    }
  }
  terms_.push_back(term);
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& other) {
  for (const auto& t : other.terms_) add(t);
  return *this;
}

cplx ExpPoly::value(double x) const {
  cplx s = 0.0;
  for (const auto& t : terms_) s += horner(t.poly, x) * std::exp(t.rate * (x - t.anchor));
  return s;
}

cplx ExpPoly::derivative(double x) const {
  cplx s = 0.0;
  for (const auto& t : terms_)
    s += (horner(derivative_coeffs(t.poly), x) + t.rate * horner(t.poly, x)) *
         std::exp(t.rate * (x - t.anchor));
  return s;
}

cplx ExpPoly::second_derivative(double x) const {
  cplx s = 0.0;
  for (const auto& t : terms_) {
    auto d1 = derivative_coeffs(t.poly);
    auto d2 = derivative_coeffs(d1);
    s += (horner(d2, x) + 2.0 * t.rate * horner(d1, x) + t.rate * t.rate * horner(t.poly, x)) *
         std::exp(t.rate * (x - t.anchor));
  }
  return s;
}

ExpPoly ExpPoly::scaled(cplx factor) const {
  ExpPoly r = *this;
  for (auto& t : r.terms_)
    for (auto& c : t.poly) c *= factor;
  return r;
}

ExpPoly ExpPoly::times_polynomial(const std::vector<cplx>& poly) const {
  ExpPoly r;
  for (const auto& t : terms_) r.add({multiply(t.poly, poly), t.rate, t.anchor});
  return r;
}

ExpPoly particular_solution(const ExpPoly& f, cplx kappa2) {
  ExpPoly y;
  for (const auto& t : f.terms()) {
    if (is_zero(t.poly)) continue;
    const cplx lam = t.rate;
    const cplx s = lam * lam - kappa2;
    const int n = static_cast<int>(t.poly.size()) - 1;
    std::vector<cplx> q;
    // q'' + 2 lam q' + s q = p, solved from the top coefficient down. A rate
    // within rounding of +-kappa counts as resonant: dividing by a rounding
    // residue would be far worse than dropping s q.
    if (std::abs(s) > 64.0 * std::numeric_limits<double>::epsilon() * std::norm(lam)) {
      q.assign(n + 3, 0.0);
      for (int j = n; j >= 0; --j)
        q[j] = (t.poly[j] - 2.0 * lam * (j + 1.0) * q[j + 1] - (j + 2.0) * (j + 1.0) * q[j + 2]) / s;
      q.resize(n + 1);
    } else {
      if (lam == 0.0) throw NumericalError("degenerate particular solution");
      q.assign(n + 3, 0.0);
      for (int j = n; j >= 0; --j)
        q[j + 1] = (t.poly[j] - (j + 2.0) * (j + 1.0) * q[j + 2]) / (2.0 * lam * (j + 1.0));
      q.resize(n + 2);
    }
    y.add({q, lam, t.anchor});
  }
  return y;
}

cplx integrate_product(const ExpPoly& f, const ExpPoly& g, int power, double lo, double hi) {
  if (lo >= hi) return 0.0;
  std::vector<cplx> xp(power + 1, 0.0);
  xp[power] = 1.0;
  cplx total = 0.0;
  for (const auto& tf : f.terms()) {
    for (const auto& tg : g.terms()) {
      auto p = multiply(multiply(tf.poly, tg.poly), xp);
      if (is_zero(p)) continue;
      const cplx r = tf.rate + tg.rate;
      bool anchor_low;
      if (std::isinf(hi) && std::isinf(lo))
        throw NumericalError("divergent integral");
      else if (std::isinf(hi))
        anchor_low = true;
      else if (std::isinf(lo))
        anchor_low = false;
      else
        anchor_low = r.real() <= 0.0;
      const double x0 = anchor_low ? lo : hi;
      const cplx scale = std::exp(tf.rate * (x0 - tf.anchor) + tg.rate * (x0 - tg.anchor));
      total += scale * integrate_term(p, r, lo, hi, anchor_low);
    }
  }
  return total;
}

double Psi1::lower_limit() const {
  return wall_distance ? -*wall_distance : -std::numeric_limits<double>::infinity();
}

cplx Psi1::operator()(double x) const {
  if (x < lower_limit()) return 0.0;
  return x < 0.0 ? inner.value(x) : outer.value(x);
}

cplx Psi1::derivative(double x) const {
  if (x < lower_limit()) return 0.0;
  return x < 0.0 ? inner.derivative(x) : outer.derivative(x);
}

cplx Psi1::second_derivative(double x) const {
  if (x < lower_limit()) return 0.0;
  return x < 0.0 ? inner.second_derivative(x) : outer.second_derivative(x);
}

cplx overlap(const Psi1& f, const Psi1& g, int power) {
  const double inf = std::numeric_limits<double>::infinity();
  double lo = std::max(f.lower_limit(), g.lower_limit());
  return integrate_product(f.inner, g.inner, power, lo, 0.0) +
         integrate_product(f.outer, g.outer, power, 0.0, inf);
}

Psi1 solve_piecewise(const AtomConfig& cfg, cplx kappa, const ExpPoly& f_inner,
                     const ExpPoly& f_outer, OriginCondition condition, const Psi1* ground) {
  if (!(kappa.real() > 0.0)) throw NumericalError("decay constant must have positive real part");
  if (condition == OriginCondition::orthogonal_to_ground && ground == nullptr)
    throw std::invalid_argument("orthogonality condition needs the ground state");
  const cplx kappa2 = kappa * kappa;
  const double z = cfg.charge();

  Psi1 particular{cfg.wall(), particular_solution(f_inner, kappa2),
                  particular_solution(f_outer, kappa2)};

  // Homogeneous pieces: e^{kappa x} and (with a wall) e^{-kappa (x + a)} inside,
  // e^{-kappa x} outside.
  std::vector<Psi1> basis;
  basis.push_back({cfg.wall(), ExpPoly({{{1.0}, kappa, 0.0}}), ExpPoly()});
  if (cfg.wall()) basis.push_back({cfg.wall(), ExpPoly({{{1.0}, -kappa, -*cfg.wall()}}), ExpPoly()});
  basis.push_back({cfg.wall(), ExpPoly(), ExpPoly({{{1.0}, -kappa, 0.0}})});

  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd m(n, n);
  Eigen::VectorXcd rhs(n);
  Eigen::Index row = 0;

  auto set_row = [&](auto&& functional) {
    rhs(row) = -functional(particular);
    for (Eigen::Index c = 0; c < n; ++c) m(row, c) = functional(basis[c]);
    ++row;
  };

  if (cfg.wall()) {
    const double a = *cfg.wall();
    set_row([a](const Psi1& y) { return y.inner.value(-a); });
  }
  set_row([](const Psi1& y) { return y.inner.value(0.0) - y.outer.value(0.0); });
  if (condition == OriginCondition::delta_jump) {
    set_row([z](const Psi1& y) {
      return y.outer.derivative(0.0) - y.inner.derivative(0.0) + 2.0 * z * y.outer.value(0.0);
    });
  } else {
    set_row([ground](const Psi1& y) { return overlap(*ground, y, 0); });
  }

  Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
  if (!lu.isInvertible()) throw NumericalError("degenerate matching system");
  Eigen::VectorXcd c = lu.solve(rhs);
  if (!c.allFinite()) throw NumericalError("degenerate matching system");

  Psi1 y = particular;
  for (Eigen::Index i = 0; i < n; ++i) {
    y.inner += basis[i].inner.scaled(c(i));
    y.outer += basis[i].outer.scaled(c(i));
  }
  return y;
}

}  // namespace confined_atom
