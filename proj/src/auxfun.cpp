#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "circdual/auxfun.hpp"
#include "polylog.hpp"

namespace circdual {
namespace {

constexpr double kF = 1.5;   // F coefficients n^{-3/2}
constexpr double kG = -0.5;  // G coefficients n^{+1/2}
// Rounding slack when a point meant to be on the unit circle lands just outside.
constexpr double kCircleSlack = 1e-14;

// Reduce to (-pi, pi].
double reduce_angle(double phi) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(phi, two_pi);
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

Complex log_on_disk(Complex z, const char* name) {
  const double r = std::abs(z);
  if (r > 1.0 + kCircleSlack)
    throw DomainError(std::string(name) + ": |z| > 1 is not on the first sheet");
  return {std::min(0.0, std::log(r)), std::arg(z)};
}

}  // namespace

void SeriesAccuracy::validate() const {
  if (!(abs_tol >= 1e-14)) throw std::invalid_argument("SeriesAccuracy: abs_tol must be >= 1e-14");
  if (max_terms < 1) throw std::invalid_argument("SeriesAccuracy: max_terms must be >= 1");
}

Complex eval_GN(std::size_t degree, Complex z) {
  // Horner on sqrt(N) z^{N-1} + ... + sqrt(1), then one factor of z.
  Complex acc = 0.0;
  for (std::size_t n = degree; n >= 1; --n) acc = acc * z + std::sqrt(static_cast<double>(n));
  return acc * z;
}

SeriesValue eval_F(Complex z, const SeriesAccuracy& acc) {
  if (z == 0.0) return {0.0, 0.0};
  return detail::polylog_exp(kF, log_on_disk(z, "eval_F"), acc);
}

SeriesValue eval_f(double phi, const SeriesAccuracy& acc) {
  return detail::polylog_exp(kF, Complex(0.0, reduce_angle(phi)), acc);
}

SeriesValue eval_G(Complex z, const SeriesAccuracy& acc) {
  if (z == 0.0) return {0.0, 0.0};
  return detail::polylog_exp(kG, log_on_disk(z, "eval_G"), acc);
}

SeriesValue eval_g(double phi, const SeriesAccuracy& acc) {
  const double r = reduce_angle(phi);
  if (std::abs(r) < kGSingularityGuard)
    throw SingularityError("eval_g: phi = " + std::to_string(phi) +
                           " is within the singularity guard of 0 mod 2 pi");
  return detail::polylog_exp(kG, Complex(0.0, r), acc);
}

SeriesValue g_finite_difference(double phi, double step, const SeriesAccuracy& acc) {
  const double r = reduce_angle(phi);
  if (!(step > 0.0)) throw std::invalid_argument("g_finite_difference: step must be positive");
  if (std::abs(r) < kGSingularityGuard + step)
    throw SingularityError("g_finite_difference: stencil reaches the singular point phi = 0");
  const Complex centre = eval_f(r, acc).value;
  auto second_difference = [&](double h) {
    return (eval_f(r + h, acc).value - 2.0 * centre + eval_f(r - h, acc).value) / (h * h);
  };
  const Complex coarse = second_difference(step);
  const Complex fine = second_difference(0.5 * step);
  const Complex extrapolated = (4.0 * fine - coarse) / 3.0;
  const double quarter = 0.25 * step * step;
  const double error = std::abs(fine - coarse) / 3.0 + 16.0 * acc.abs_tol / quarter;
  return {-extrapolated, error};
}

GCrossCheck cross_check_g(double phi, const SeriesAccuracy& acc) {
  GCrossCheck out{eval_g(phi, acc), g_finite_difference(phi, 1e-3, acc), 0.0, 0.0};
  out.difference = std::abs(out.series.value - out.finite_difference.value);
  out.tolerance = std::max(1e-6, 1e-4 * std::abs(out.series.value));
  return out;
}

SeriesValue abel_boundary_value(double power, double phi, Sheet side, int levels) {
  const double r = reduce_angle(phi);
  if (std::abs(r) < kGSingularityGuard)
    throw SingularityError("abel_boundary_value: phi too close to the branch point z = 1");
  if (levels < 2) throw std::invalid_argument("abel_boundary_value: need at least 2 levels");

  // The sampled function is analytic in h within |h| < |1 - e^{i phi}|.
  const double h0 = 0.1 * std::min(1.0, 2.0 * std::sin(0.5 * std::abs(r)));
  std::vector<double> hs(levels);
  std::vector<Complex> values(levels);
  for (int j = 0; j < levels; ++j) {
    const double h = h0 / std::pow(2.0, j);
    hs[j] = h;
    // Sheet 1: z = (1-h) e^{i phi}.  Sheet 2: z^{-1} = e^{-i phi}/(1+h).
    const Complex z = side == Sheet::First ? std::polar(1.0 - h, r) : std::polar(1.0 / (1.0 + h), -r);
    Complex sum = 0.0;
    Complex zn = 1.0;
    const double modulus = std::abs(z);
    for (std::size_t n = 1;; ++n) {
      zn *= z;
      if (n % 512 == 0) zn = std::polar(std::pow(modulus, static_cast<double>(n)), std::arg(z) * n);
      const Complex term = std::pow(static_cast<double>(n), power) * zn;
      sum += term;
      if (static_cast<double>(n) * h > std::max(1.0, power) && std::abs(term) < 1e-17) break;
    }
    values[j] = sum;
  }

  // Neville tableau in h, evaluated at h = 0.
  std::vector<Complex> p = values;
  Complex previous_estimate = p[0];
  for (int m = 1; m < levels; ++m) {
    for (int i = levels - 1; i >= m; --i) {
      p[i] = (hs[i - m] * p[i] - hs[i] * p[i - 1]) / (hs[i - m] - hs[i]);
    }
    if (m == levels - 1) previous_estimate = p[levels - 2];
  }
  return {p[levels - 1], std::abs(p[levels - 1] - previous_estimate)};
}

}  // namespace circdual
