#pragma once

// Dense complex kernels. Every routine has an OpenMP version and a serial
// reference in kernels::serial. Each output entry is accumulated by a single
// thread in a fixed order, so both versions return bit-identical results.

#include <cstddef>
#include <span>
#include <vector>

#include "circdual/errors.hpp"

namespace circdual {

// Square, row-major, dense.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }
  std::span<const Complex> row(std::size_t r) const {
    return std::span<const Complex>(data_).subspan(r * dim_, dim_);
  }

  ComplexMatrix adjoint() const;

  // max_ij |A_ij - B_ij|
  double max_abs_diff(const ComplexMatrix& other) const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

namespace kernels {

void matvec(const ComplexMatrix& a, std::span<const Complex> x, std::span<Complex> y);
void adjoint_matvec(const ComplexMatrix& a, std::span<const Complex> x, std::span<Complex> y);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
// a * b^dagger
ComplexMatrix matmul_adjoint(const ComplexMatrix& a, const ComplexMatrix& b);
// u * a * u^dagger
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& a);
// max_ij |(a^dagger a - I)_ij|
double unitarity_residual(const ComplexMatrix& a);

namespace serial {

void matvec(const ComplexMatrix& a, std::span<const Complex> x, std::span<Complex> y);
void adjoint_matvec(const ComplexMatrix& a, std::span<const Complex> x, std::span<Complex> y);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul_adjoint(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& a);
double unitarity_residual(const ComplexMatrix& a);

}  // namespace serial
}  // namespace kernels
}  // namespace circdual
