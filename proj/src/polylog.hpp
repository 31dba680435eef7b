#pragma once

#include "circdual/auxfun.hpp"

namespace circdual::detail {

// sum_{n>=1} n^{-order} e^{mu n} for Re mu <= 0 and |Im mu| <= pi.
// Direct summation well inside the disk; otherwise a short direct sum plus an
// Euler-Maclaurin tail whose integral is an incomplete gamma function. For
// order < 1 on the circle the result is the Abel (analytically continued)
// value. mu = 0 with order <= 1 throws SingularityError.
SeriesValue polylog_exp(double order, Complex mu, const SeriesAccuracy& acc);

// w^{-a} e^{w} Gamma(a, w) by continued fraction; accurate for |w| >~ 6.
Complex incomplete_gamma_cf_scaled(double a, Complex w);

}  // namespace circdual::detail
