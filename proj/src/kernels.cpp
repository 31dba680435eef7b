#include "circdual/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace circdual {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (other.dim_ != dim_) throw DimensionError("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  return worst;
}

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
}

// Entry-level primitives shared by both drivers. The summation order is fixed
// here, which is what makes parallel and serial results identical. Products
// are spelled out in real arithmetic; inputs are finite, so the inf/nan
// recovery of the library complex multiply is not needed.

inline Complex mul(Complex x, Complex y) {
  return {x.real() * y.real() - x.imag() * y.imag(), x.real() * y.imag() + x.imag() * y.real()};
}

inline Complex mul_conj(Complex x, Complex y) {
  return {x.real() * y.real() + x.imag() * y.imag(), x.imag() * y.real() - x.real() * y.imag()};
}

inline Complex row_dot(const ComplexMatrix& a, std::size_t r, std::span<const Complex> x) {
  Complex acc = 0.0;
  const auto row = a.row(r);
  for (std::size_t k = 0; k < x.size(); ++k) acc += mul(row[k], x[k]);
  return acc;
}

inline Complex column_conj_dot(const ComplexMatrix& a, std::size_t c,
                               std::span<const Complex> x) {
  Complex acc = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) acc += mul_conj(x[k], a(k, c));
  return acc;
}

// Row r of a against row c of bt, where bt is the transpose of the right factor.
inline Complex product_entry(const ComplexMatrix& a, const ComplexMatrix& bt, std::size_t r,
                             std::size_t c) {
  Complex acc = 0.0;
  const auto ar = a.row(r);
  const auto bc = bt.row(c);
  for (std::size_t k = 0; k < a.dim(); ++k) acc += mul(ar[k], bc[k]);
  return acc;
}

inline Complex product_adjoint_entry(const ComplexMatrix& a, const ComplexMatrix& b,
                                     std::size_t r, std::size_t c) {
  Complex acc = 0.0;
  const auto ar = a.row(r);
  const auto br = b.row(c);
  for (std::size_t k = 0; k < a.dim(); ++k) acc += mul_conj(ar[k], br[k]);
  return acc;
}

// Entry (r, c) of a^dag a - I, with at the transpose of a.
inline double gram_deviation(const ComplexMatrix& at, std::size_t r, std::size_t c) {
  Complex acc = 0.0;
  const auto ar = at.row(r);
  const auto ac = at.row(c);
  for (std::size_t k = 0; k < at.dim(); ++k) acc += mul_conj(ac[k], ar[k]);
  if (r == c) acc -= 1.0;
  return std::abs(acc);
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(c, r) = a(r, c);
  return out;
}

}  // namespace

namespace kernels {

void matvec(const ComplexMatrix& a, std::span<const Complex> x, std::span<Complex> y) {
  require_same(a.dim(), x.size(), "matvec");
  require_same(a.dim(), y.size(), "matvec");
  const auto n = static_cast<std::ptrdiff_t>(a.dim());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < n; ++r) y[r] = row_dot(a, r, x);
}

void adjoint_matvec(const ComplexMatrix& a, std::span<const Complex> x, std::span<Complex> y) {
  require_same(a.dim(), x.size(), "adjoint_matvec");
  require_same(a.dim(), y.size(), "adjoint_matvec");
  const auto n = static_cast<std::ptrdiff_t>(a.dim());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < n; ++c) y[c] = column_conj_dot(a, c, x);
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same(a.dim(), b.dim(), "matmul");
  const auto bt = transpose(b);
  ComplexMatrix out(a.dim());
  const auto n = static_cast<std::ptrdiff_t>(a.dim());
#pragma omp parallel for collapse(2) schedule(static)
  for (std::ptrdiff_t r = 0; r < n; ++r)
    for (std::ptrdiff_t c = 0; c < n; ++c) out(r, c) = product_entry(a, bt, r, c);
  return out;
}

ComplexMatrix matmul_adjoint(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same(a.dim(), b.dim(), "matmul_adjoint");
  ComplexMatrix out(a.dim());
  const auto n = static_cast<std::ptrdiff_t>(a.dim());
#pragma omp parallel for collapse(2) schedule(static)
  for (std::ptrdiff_t r = 0; r < n; ++r)
    for (std::ptrdiff_t c = 0; c < n; ++c) out(r, c) = product_adjoint_entry(a, b, r, c);
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& a) {
  return matmul_adjoint(matmul(u, a), u);
}

double unitarity_residual(const ComplexMatrix& a) {
  const auto at = transpose(a);
  const auto n = static_cast<std::ptrdiff_t>(a.dim());
  double worst = 0.0;
#pragma omp parallel for collapse(2) reduction(max : worst) schedule(static)
  for (std::ptrdiff_t r = 0; r < n; ++r)
    for (std::ptrdiff_t c = 0; c < n; ++c) worst = std::max(worst, gram_deviation(at, r, c));
  return worst;
}

namespace serial {

void matvec(const ComplexMatrix& a, std::span<const Complex> x, std::span<Complex> y) {
  require_same(a.dim(), x.size(), "matvec");
  require_same(a.dim(), y.size(), "matvec");
  for (std::size_t r = 0; r < a.dim(); ++r) y[r] = row_dot(a, r, x);
}

void adjoint_matvec(const ComplexMatrix& a, std::span<const Complex> x, std::span<Complex> y) {
  require_same(a.dim(), x.size(), "adjoint_matvec");
  require_same(a.dim(), y.size(), "adjoint_matvec");
  for (std::size_t c = 0; c < a.dim(); ++c) y[c] = column_conj_dot(a, c, x);
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same(a.dim(), b.dim(), "matmul");
  const auto bt = transpose(b);
  ComplexMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = product_entry(a, bt, r, c);
  return out;
}

ComplexMatrix matmul_adjoint(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same(a.dim(), b.dim(), "matmul_adjoint");
  ComplexMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = product_adjoint_entry(a, b, r, c);
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& a) {
  return matmul_adjoint(matmul(u, a), u);
}

double unitarity_residual(const ComplexMatrix& a) {
  const auto at = transpose(a);
  double worst = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) worst = std::max(worst, gram_deviation(at, r, c));
  return worst;
}

}  // namespace serial
}  // namespace kernels
}  // namespace circdual
