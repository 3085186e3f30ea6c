#pragma once

#include <functional>

namespace confined_atom {

inline constexpr double default_root_tolerance = 1e-12;
inline constexpr double default_quadrature_tolerance = 1e-10;

// Root of f in [lo, hi]; f(lo) and f(hi) must differ in sign. Regula falsi
// steps, with a bisection step whenever the bracket failed to halve over the
// previous step, so the bracket width at least halves every two evaluations.
// Stops once the bracket is narrower than tol (or than a few ulps of the
// root) and returns the endpoint with the smaller |f|.
// Throws NumericalError("no root in bracket") without a sign change.
double find_root_bracketed(const std::function<double(double)>& f, double lo, double hi,
                           double tol = default_root_tolerance);

// Adaptive Gauss-Kronrod integral of f over [lo, hi]; hi may be +infinity.
// Guarantees |error| <= tol * (1 + |result|) or throws
// NumericalError("quadrature failed"). Kinks should be placed at interval
// ends by the caller.
double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double tol = default_quadrature_tolerance);

}  // namespace confined_atom
