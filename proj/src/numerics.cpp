#include "confined_atom/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <utility>

#include "confined_atom/errors.hpp"

namespace confined_atom {

double find_root_bracketed(const std::function<double(double)>& f, double lo, double hi,
                           double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("root tolerance must be positive");
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!(std::signbit(flo) != std::signbit(fhi)) || std::isnan(flo) || std::isnan(fhi))
    throw NumericalError("no root in bracket");

  constexpr double eps = std::numeric_limits<double>::epsilon();
  bool force_bisection = false;
  for (int iter = 0; iter < 400; ++iter) {
    double width = hi - lo;
    double floor = 4.0 * eps * std::max(std::abs(lo), std::abs(hi));
    if (width <= std::max(tol, floor)) break;

    double x = 0.5 * (lo + hi);
    if (!force_bisection) {
      double secant = hi - fhi * (hi - lo) / (fhi - flo);
      if (secant > lo && secant < hi) x = secant;
    }
    double fx = f(x);
    if (fx == 0.0) return x;
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    force_bisection = (hi - lo) > 0.5 * width;
  }
  return std::abs(flo) <= std::abs(fhi) ? lo : hi;
}

double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double tol) {
  using boost::math::quadrature::gauss_kronrod;
  if (!(tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
  if (lo == hi) return 0.0;
  double error = 0.0;
  double l1 = 0.0;
  // Boost's tolerance is relative to the L1 norm; ask for a bit more and
  // check the caller's absolute-plus-relative criterion afterwards.
  double result = gauss_kronrod<double, 31>::integrate(f, lo, hi, 20, 0.1 * tol, &error, &l1);
  if (!std::isfinite(result) || error > tol * (1.0 + std::abs(result)))
    throw NumericalError("quadrature failed");
  return result;
}

}  // namespace confined_atom
