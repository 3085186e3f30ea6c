#include "confined_atom/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "confined_atom/errors.hpp"

namespace confined_atom {
namespace {

// Number of eigenvalues below x.
std::size_t sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double coupling = i ? e[i - 1] * e[i - 1] : 0.0;
    q = d[i] - x - (i ? coupling / q : 0.0);
    if (q == 0.0) q = -std::numeric_limits<double>::epsilon() * (std::abs(d[i]) + std::abs(x) + 1e-300);
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

void tridiagonal_ql(std::vector<double>& d, std::vector<double> e, std::vector<double>& w,
                    std::size_t count) {
  const std::size_t n = d.size();
  if (n == 0) return;
  if (e.size() + 1 != n) throw std::invalid_argument("off-diagonal must have n-1 entries");
  if (w.size() != n * count) throw std::invalid_argument("vector block has wrong size");
  e.push_back(0.0);
  const double eps = std::numeric_limits<double>::epsilon();
  const auto ni = static_cast<long>(n);

  for (long l = 0; l < ni; ++l) {
    int iter = 0;
    for (;;) {
      long m = l;
      for (; m < ni - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > 60) throw NumericalError("tridiagonal QL did not converge");

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::sqrt(g * g + 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool split = false;
      for (long i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::sqrt(f * f + g * g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          split = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        double* lo = w.data() + static_cast<std::size_t>(i) * count;
        double* hi = lo + count;
        for (std::size_t k = 0; k < count; ++k) {
          f = hi[k];
          hi[k] = s * lo[k] + c * f;
          lo[k] = c * lo[k] - s * f;
        }
      }
      if (split) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
}

double lowest_eigenvalue(const std::vector<double>& d, const std::vector<double>& e) {
  const std::size_t n = d.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    const double radius = (i ? std::abs(e[i - 1]) : 0.0) + (i + 1 < n ? std::abs(e[i]) : 0.0);
    lo = std::min(lo, d[i] - radius);
    hi = std::max(hi, d[i] + radius);
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (sturm_count(d, e, mid) >= 1 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> inverse_iteration(const std::vector<double>& d, const std::vector<double>& e,
                                      double lambda) {
  const std::size_t n = d.size();
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(d[i]));
  // Shift slightly below lambda; for the lowest eigenvalue this keeps the
  // shifted matrix positive definite, so elimination needs no pivoting.
  const double sigma = lambda - 1e-13 * scale - 1e-10 * std::abs(lambda);
  std::vector<double> y(n, 1.0), cprime(n), dprime(n);
  for (int sweep = 0; sweep < 4; ++sweep) {
    double beta = d[0] - sigma;
    dprime[0] = y[0] / beta;
    for (std::size_t i = 1; i < n; ++i) {
      cprime[i - 1] = e[i - 1] / beta;
      beta = d[i] - sigma - e[i - 1] * cprime[i - 1];
      dprime[i] = (y[i] - e[i - 1] * dprime[i - 1]) / beta;
    }
    y[n - 1] = dprime[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) y[i] = dprime[i] - cprime[i] * y[i + 1];
    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : y) v /= norm;
  }
  return y;
}

}  // namespace confined_atom
