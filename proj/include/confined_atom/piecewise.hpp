#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "confined_atom/atom.hpp"

namespace confined_atom {

using cplx = std::complex<double>;

// p(x) * exp(rate * (x - anchor)), with p given by its coefficients in x.
// The anchor keeps the exponential of order one on the interval where the
// term lives.
struct ExpPolyTerm {
  std::vector<cplx> poly;
  cplx rate;
  double anchor = 0.0;
};

// Finite sum of exponential-polynomial terms. Closed under multiplication by
// polynomials, differentiation and the particular-solution map of
// y'' - kappa^2 y = f, which is all the response equations need.
class ExpPoly {
 public:
  ExpPoly() = default;
  explicit ExpPoly(std::vector<ExpPolyTerm> terms);

  // Terms with equal rate and anchor are merged.
  void add(const ExpPolyTerm& term);
  ExpPoly& operator+=(const ExpPoly& other);

  cplx value(double x) const;
  cplx derivative(double x) const;
  cplx second_derivative(double x) const;

  ExpPoly scaled(cplx factor) const;
  ExpPoly times_polynomial(const std::vector<cplx>& poly) const;

  const std::vector<ExpPolyTerm>& terms() const noexcept { return terms_; }

 private:
  std::vector<ExpPolyTerm> terms_;
};

// Particular solution of y'' - kappa2 y = f, term by term. A term whose rate
// solves rate^2 = kappa2 (to rounding) gets one extra polynomial degree.
ExpPoly particular_solution(const ExpPoly& f, cplx kappa2);

// Integral of f(x) g(x) x^power over [lo, hi]. hi may be +infinity and lo may
// be -infinity provided every product term decays there.
cplx integrate_product(const ExpPoly& f, const ExpPoly& g, int power, double lo, double hi);

// Function given by analytic pieces on (-a, 0) and (0, inf), or on
// (-inf, 0) and (0, inf) for the isolated atom; zero behind the wall.
struct Psi1 {
  std::optional<double> wall_distance;
  ExpPoly inner;
  ExpPoly outer;

  cplx operator()(double x) const;
  // One-sided at the origin: x < 0 uses the inner piece, x >= 0 the outer.
  cplx derivative(double x) const;
  cplx second_derivative(double x) const;
  cplx derivative_left_of_origin() const { return inner.derivative(0.0); }
  cplx derivative_right_of_origin() const { return outer.derivative(0.0); }
  double lower_limit() const;
};

// Overlap integral of two piecewise functions times x^power over the domain.
cplx overlap(const Psi1& f, const Psi1& g, int power);

enum class OriginCondition {
  delta_jump,          // y'(0+) - y'(0-) = -2 Z y(0)
  orthogonal_to_ground // <u_b|y> = 0, replaces the (then redundant) jump row
};

// Solves y'' - kappa^2 y = f piecewise with y(-a) = 0, continuity at 0,
// no e^{+kappa x} growth on the right (nor e^{-kappa x} on the far left for
// the isolated atom), and the requested origin condition. kappa must have a
// positive real part. Throws NumericalError("degenerate matching system").
Psi1 solve_piecewise(const AtomConfig& cfg, cplx kappa, const ExpPoly& f_inner,
                     const ExpPoly& f_outer, OriginCondition condition,
                     const Psi1* ground = nullptr);

}  // namespace confined_atom
