#include "polylog.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace circdual::detail {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Direct summation is used for |z| <= 3/4.
const double kDirectRadiusLog = std::log(0.75);
constexpr std::size_t kTailStart = 128;
constexpr int kMaxCorrections = 40;
// |w| at which the incomplete gamma switches from power series to continued fraction.
constexpr double kSeriesSwitch = 6.0;

// B_{2k} / (2k)!  for k = 1..kMaxCorrections, from zeta(2k).
const std::array<double, kMaxCorrections + 1>& bernoulli_ratios() {
  static const auto table = [] {
    std::array<double, kMaxCorrections + 1> t{};
    const double two_pi = 2.0 * std::numbers::pi;
    for (int k = 1; k <= kMaxCorrections; ++k) {
      double zeta;
      if (k == 1) {
        zeta = std::numbers::pi * std::numbers::pi / 6.0;
      } else {
        // Sum below 2000, then the tail integral + half end term + first slope correction.
        constexpr double cut = 2000.0;
        const double s = 2.0 * k;
        zeta = std::pow(cut, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(cut, -s) +
               s / 12.0 * std::pow(cut, -s - 1.0);
        for (int n = 1999; n >= 1; --n) zeta += std::pow(static_cast<double>(n), -s);
      }
      const double sign = (k % 2 == 1) ? 1.0 : -1.0;
      t[k] = sign * 2.0 * zeta / std::pow(two_pi, 2.0 * k);
    }
    return t;
  }();
  return table;
}

// e^{mu x} with the phase Im(mu) x carried as an exact hi + lo pair, so the
// rounding of the product does not grow with x.
Complex exp_scaled(Complex mu, double x) {
  const double hi = mu.imag() * x;
  const double lo = std::fma(mu.imag(), x, -hi);
  return std::exp(mu.real() * x) * std::polar(1.0, hi) * Complex(1.0, lo);
}

SeriesValue direct_sum(double order, Complex mu, const SeriesAccuracy& acc) {
  const Complex z = std::exp(mu);
  const double r = std::abs(z);
  Complex sum = 0.0;
  double magnitude = 0.0;
  Complex zn = 1.0;
  for (std::size_t n = 1; n <= acc.max_terms; ++n) {
    zn *= z;
    const double coeff = std::pow(static_cast<double>(n), -order);
    const Complex term = coeff * zn;
    sum += term;
    magnitude += std::abs(term);
    // Geometric bound on the remainder once the terms are decreasing.
    const double next_coeff_ratio = std::pow(static_cast<double>(n + 1) / n, -order);
    const double q = r * std::max(1.0, next_coeff_ratio);
    if (q < 1.0) {
      const double bound = std::abs(term) * q / (1.0 - q);
      if (bound < 0.1 * acc.abs_tol) {
        return {sum, bound + 2.0 * kEps * magnitude};
      }
    }
  }
  throw ConvergenceError("polylog: direct summation did not reach tolerance within max_terms",
                         sum, std::abs(zn));
}

// \int_M^\infty x^{-order} e^{mu x} dx, analytically continued in mu.
Complex tail_integral(double order, Complex mu, double m) {
  const double a = 1.0 - order;
  const Complex w = -mu * m;
  const double ma = std::pow(m, a);
  if (std::abs(w) > kSeriesSwitch) {
    return ma * exp_scaled(mu, m) * incomplete_gamma_cf_scaled(a, w);
  }
  // Gamma(a, w) = Gamma(a) - w^a sum_k (-w)^k / (k! (a + k))
  Complex series = 0.0;
  Complex power = 1.0;
  for (int k = 0; k < 200; ++k) {
    if (k > 0) power *= -w / static_cast<double>(k);
    const Complex term = power / (a + k);
    series += term;
    if (k > 4 && std::abs(term) < 1e-18 * std::abs(series)) break;
  }
  Complex leading = 0.0;
  if (mu != 0.0) {
    leading = std::pow(-mu, -a) * std::tgamma(a);
  } else if (a > 0.0) {
    throw SingularityError("polylog: series diverges at z = 1 for order <= 1");
  }
  return leading - ma * series;
}

SeriesValue euler_maclaurin(double order, Complex mu, const SeriesAccuracy& acc) {
  const std::size_t m = std::min<std::size_t>(kTailStart, acc.max_terms);
  if (m < 8)
    throw ConvergenceError("polylog: max_terms too small for the tail expansion", 0.0,
                           std::numeric_limits<double>::infinity());
  const double md = static_cast<double>(m);

  Complex sum = 0.0;
  double magnitude = 0.0;
  for (std::size_t n = 1; n < m; ++n) {
    const Complex term = std::pow(static_cast<double>(n), -order) * exp_scaled(mu, static_cast<double>(n));
    sum += term;
    magnitude += std::abs(term);
  }

  const Complex integral = tail_integral(order, mu, md);
  const Complex em = exp_scaled(mu, md);
  const Complex h0 = std::pow(md, -order) * em;
  sum += integral + 0.5 * h0;
  magnitude += std::abs(integral) + std::abs(h0);

  // d_j = (-order)(-order-1)...(-order-j+1) M^{-order-j}
  constexpr int kMaxDeriv = 2 * kMaxCorrections;
  std::array<double, kMaxDeriv> d{};
  d[0] = std::pow(md, -order);
  for (int j = 1; j < kMaxDeriv; ++j) d[j] = d[j - 1] * (-order - (j - 1)) / md;
  std::array<Complex, kMaxDeriv> mu_pow{};
  mu_pow[0] = 1.0;
  for (int j = 1; j < kMaxDeriv; ++j) mu_pow[j] = mu_pow[j - 1] * mu;

  const auto& ratios = bernoulli_ratios();
  double last = std::numeric_limits<double>::infinity();
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= kMaxCorrections; ++k) {
    const int deriv = 2 * k - 1;
    // h^{(deriv)}(M) = e^{mu M} sum_j C(deriv, j) mu^{deriv-j} d_j
    Complex acc_deriv = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= deriv; ++j) {
      acc_deriv += binom * mu_pow[deriv - j] * d[j];
      binom = binom * (deriv - j) / (j + 1);
    }
    const Complex correction = ratios[k] * em * acc_deriv;
    const double size = std::abs(correction);
    if (size > previous) break;  // asymptotic series started to grow
    sum -= correction;
    magnitude += size;
    previous = size;
    last = size;
    if (size < 1e-3 * acc.abs_tol) break;
  }

  // Only the truncation part can be improved by more terms; rounding is reported, not tested.
  const double error = last + 2.0 * kEps * magnitude;
  if (last > acc.abs_tol)
    throw ConvergenceError("polylog: tail expansion could not reach abs_tol = " +
                               std::to_string(acc.abs_tol),
                           sum, error);
  return {sum, error};
}

}  // namespace

Complex incomplete_gamma_cf_scaled(double a, Complex w) {
  // Modified Lentz evaluation of
  // Gamma(a,w) = e^{-w} w^a / (w+1-a- 1(1-a)/(w+3-a- 2(2-a)/(w+5-a- ...)))
  constexpr double tiny = 1e-300;
  Complex b = w + 1.0 - a;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const Complex delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) return h;
  }
  throw ConvergenceError("incomplete gamma continued fraction did not converge", h, 0.0);
}

SeriesValue polylog_exp(double order, Complex mu, const SeriesAccuracy& acc) {
  acc.validate();
  if (mu.real() > 0.0) throw DomainError("polylog: |z| > 1 is outside the first sheet");
  if (mu.real() <= kDirectRadiusLog) return direct_sum(order, mu, acc);
  return euler_maclaurin(order, mu, acc);
}

}  // namespace circdual::detail
