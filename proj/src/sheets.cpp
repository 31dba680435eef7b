#include <cmath>
#include <string>

#include "circdual/auxfun.hpp"
#include "polylog.hpp"

namespace circdual {

Complex map_y(Complex z) {
  const Complex denom = (1.0 + z) * (1.0 + z);
  if (denom == 0.0) throw PoleError("map_y: z = -1 is a pole of 4z/(1+z)^2");
  return 4.0 * z / denom;
}

Complex map_z(Complex y, Sheet sheet, CutSide side) {
  const Complex one_minus = 1.0 - y;
  Complex root;
  if (y.imag() == 0.0 && y.real() > 1.0) {
    // 1 - y is on the negative real axis: y + i0 gives sqrt(1 - y) = -i sqrt(y - 1).
    const double q = std::sqrt(y.real() - 1.0);
    switch (side) {
      case CutSide::Above: root = Complex(0.0, -q); break;
      case CutSide::Below: root = Complex(0.0, q); break;
      case CutSide::Unspecified:
        throw BranchCutError("map_z: y = " + std::to_string(y.real()) +
                             " lies on the cut [1, inf); specify the approach side");
    }
  } else {
    root = std::sqrt(one_minus);
  }
  // -1 + (2/y)(1 -+ root), rationalized with 1 - root = y / (1 + root). Re root >= 0,
  // so |1 + root| >= 1 and nothing cancels: sheet 1 is y / (1 + root)^2 = y/4 + y^2/8 + ...,
  // sheet 2 its reciprocal.
  const Complex plus = 1.0 + root;
  if (sheet == Sheet::First) return y / (plus * plus);
  if (y == 0.0) throw PoleError("map_z: y = 0 maps to z = infinity on the second sheet");
  return plus * plus / y;
}

SheetPoint lift_to_y(Complex z) {
  return {map_y(z), std::abs(z) <= 1.0 ? Sheet::First : Sheet::Second};
}

Complex to_z(const SheetPoint& point, CutSide side) { return map_z(point.coord, point.sheet, side); }

SeriesValue eval_G_sheet2(Complex z, const SeriesAccuracy& acc) {
  if (!(std::abs(z) > 1.0)) throw DomainError("eval_G_sheet2: requires |z| > 1");
  return eval_G(1.0 / z, acc);
}

SeriesValue eval_F_sheet2(Complex z, const SeriesAccuracy& acc) {
  if (!(std::abs(z) >= 1.0)) throw DomainError("eval_F_sheet2: requires |z| >= 1");
  const Complex w = 1.0 / z;
  if (std::abs(w) > 1.0) return eval_F(w / std::abs(w), acc);  // rounding on the circle
  return eval_F(w, acc);
}

}  // namespace circdual
