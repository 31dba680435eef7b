#pragma once

// The auxiliary function family of the oscillator/circle duality:
//
//   G_N(z) = sum_{n=1}^{N} sqrt(n) z^n          (polynomial)
//   G(z)   = sum_{n>=1}  sqrt(n) z^n            (|z| < 1, Abel value on |z| = 1, z != 1)
//   F(z)   = sum_{n>=1}  z^n / n^{3/2}          (closed unit disk)
//   f(phi) = F(e^{i phi}),   g(phi) = G(e^{i phi}) = -f''(phi)
//
// plus the two-sheet map y = 4z/(1+z)^2 whose second sheet is z -> 1/z.

#include <cstddef>
#include <vector>

#include "circdual/errors.hpp"

namespace circdual {

struct SeriesAccuracy {
  double abs_tol = 1e-13;
  std::size_t max_terms = 1'000'000;

  void validate() const;
};

struct SeriesValue {
  Complex value;
  double error;  // estimated absolute error
};

Complex eval_GN(std::size_t degree, Complex z);

SeriesValue eval_F(Complex z, const SeriesAccuracy& acc = {});
SeriesValue eval_f(double phi, const SeriesAccuracy& acc = {});

// Sheet-1 G for |z| <= 1. On the circle this is the Abel-regular value; z = 1 is singular.
SeriesValue eval_G(Complex z, const SeriesAccuracy& acc = {});

// g via the term-wise differentiated series sum sqrt(n) e^{i n phi}.
// |phi mod 2 pi| < 1e-3 throws SingularityError.
SeriesValue eval_g(double phi, const SeriesAccuracy& acc = {});

// g = -f'' from central second differences of eval_f at steps h and h/2,
// combined by Richardson extrapolation.
SeriesValue g_finite_difference(double phi, double step = 1e-3, const SeriesAccuracy& acc = {});

struct GCrossCheck {
  SeriesValue series;
  SeriesValue finite_difference;
  double difference;
  double tolerance;  // max(1e-6, 1e-4 |g|)
  bool agree() const noexcept { return difference <= tolerance; }
};

GCrossCheck cross_check_g(double phi, const SeriesAccuracy& acc = {});

// Near-singularity guard for g around phi = 0 (mod 2 pi).
inline constexpr double kGSingularityGuard = 1e-3;

enum class Sheet : int { First = 1, Second = 2 };
enum class CutSide { Unspecified, Above, Below };

struct SheetPoint {
  Complex coord;
  Sheet sheet;
};

// y = 4z / (1+z)^2; z = -1 throws PoleError.
Complex map_y(Complex z);

// Inverse of map_y on the requested sheet. Sheet 1 lands in |z| <= 1, sheet 2
// is its reciprocal. Real y > 1 lies on the cut and needs an approach side.
Complex map_z(Complex y, Sheet sheet, CutSide side = CutSide::Unspecified);

// z -> (y, sheet) with sheet 1 for |z| <= 1.
SheetPoint lift_to_y(Complex z);
Complex to_z(const SheetPoint& point, CutSide side = CutSide::Unspecified);

// Second-sheet continuation sum sqrt(n) z^{-n} for |z| > 1.
SeriesValue eval_G_sheet2(Complex z, const SeriesAccuracy& acc = {});
// sum z^{-n} / n^{3/2} for |z| >= 1.
SeriesValue eval_F_sheet2(Complex z, const SeriesAccuracy& acc = {});

// Abel limit of sum n^power (r e^{i phi})^n as r -> 1 from inside (sheet 1),
// or of sum n^power (r e^{i phi})^{-n} as r -> 1 from outside (sheet 2).
// Samples r = 1 -+ h_j, h_j = h_0 / 2^j, and extrapolates polynomially in h.
SeriesValue abel_boundary_value(double power, double phi, Sheet side, int levels = 6);

struct ZeroSet {
  std::size_t degree = 0;
  std::vector<Complex> roots;  // sorted by argument
  double residual = 0.0;       // max |G_N(root)|
  double coefficient_sum = 0.0;

  std::size_t count_near_unit_circle(double band) const;
  double fraction_near_unit_circle(double band) const;
};

// All N roots of G_N (one of them is z = 0). Supported for 1 <= N <= 512.
ZeroSet find_zeros(std::size_t degree);

}  // namespace circdual
