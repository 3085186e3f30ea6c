#pragma once

#include <complex>

namespace confined_atom {

using cplx = std::complex<double>;

struct AiryPair {
  cplx ai;
  cplx bi;
  cplx ai_prime;
  cplx bi_prime;
};

// Below this radius every function comes from the Maclaurin series.
inline constexpr double airy_series_radius = 6.0;
// Beyond this radius the asymptotic expansions are used. In between, Bi and
// the non-recessive Ai come from the series; Ai in |arg z| < pi/3, where it
// is exponentially small, is continued inward from the asymptotic region by
// Taylor steps of the Airy equation.
inline constexpr double airy_asymptotic_radius = 9.0;
// Largest |z| accepted by airy_eval; e^{(2/3)|z|^{3/2}} still fits a double.
inline constexpr double airy_max_argument = 100.0;
inline constexpr int airy_max_coefficient_index = 40;

// Ai, Bi and their derivatives for |z| <= airy_max_argument, to about 1e-10
// relative accuracy (absolute near zeros). Throws RangeError otherwise.
AiryPair airy_eval(cplx z);

// Ci = Bi + i Ai and its derivative.
cplx airy_ci(cplx z);
cplx airy_ci_prime(cplx z);

// u_k = Gamma(3k + 1/2) / (54^k k! Gamma(k + 1/2)); u_0 = 1.
// Throws RangeError for k outside [0, airy_max_coefficient_index].
double airy_asymptotic_coeffs(int k);

// Airy functions with their exponential behaviour divided out, valid for any
// finite z: ai and ai_prime carry a factor e^{zeta}, bi and bi_prime a factor
// e^{-zeta}, zeta = (2/3) z^{3/2} on the principal branch.
struct ScaledAiryPair {
  cplx ai;
  cplx bi;
  cplx ai_prime;
  cplx bi_prime;
  cplx zeta;
};

ScaledAiryPair airy_eval_scaled(cplx z);

namespace detail {
// The two direct branches, exposed for the overlap tests.
AiryPair airy_series(cplx z);
AiryPair airy_asymptotic(cplx z);
}  // namespace detail

}  // namespace confined_atom
