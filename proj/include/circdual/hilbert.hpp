#pragma once

// Finite-N state spaces for the oscillator / circle pair.
//
// Energy basis |n>^E, n = 0..N-1, and ontological basis |s>^ont, s = 0..N-1
// (the particle sits at angle 2*pi*s/N). They are related by the unitary map
//
//   |n>^E = N^{-1/2} sum_s exp(+2 pi i n s / N) |s>^ont
//
// so U[s][n] = exp(2 pi i n s / N) / sqrt(N) and column n of U holds |n>^E
// in ontological coordinates.

#include <cstddef>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "circdual/errors.hpp"
#include "circdual/kernels.hpp"

namespace circdual {

enum class Basis { Energy, Ontological };

std::string_view to_string(Basis basis) noexcept;

// Throws BasisMismatch unless the two tags agree.
void require_same_basis(Basis lhs, Basis rhs, std::string_view context);

class StateVector {
 public:
  StateVector(Basis basis, std::vector<Complex> amplitudes);

  static StateVector basis_state(Basis basis, std::size_t dim, std::size_t index);
  // Gaussian amplitudes, normalized to 1.
  static StateVector random(Basis basis, std::size_t dim, std::mt19937_64& rng);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  Basis basis() const noexcept { return basis_; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm_squared() const noexcept;
  bool is_normalized(double tol = 1e-12) const noexcept;
  StateVector normalized() const;

  // <this|other>
  Complex inner(const StateVector& other) const;
  double max_abs_diff(const StateVector& other) const;

  StateVector& operator+=(const StateVector& other);
  StateVector& operator-=(const StateVector& other);
  StateVector& operator*=(Complex factor) noexcept;

  friend StateVector operator+(StateVector lhs, const StateVector& rhs) { return lhs += rhs; }
  friend StateVector operator-(StateVector lhs, const StateVector& rhs) { return lhs -= rhs; }
  friend StateVector operator*(Complex factor, StateVector v) { return v *= factor; }

 private:
  Basis basis_;
  std::vector<Complex> amplitudes_;
};

class DualityMap {
 public:
  explicit DualityMap(std::size_t dim);

  std::size_t dim() const noexcept { return matrix_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Complex& operator()(std::size_t s, std::size_t n) const { return matrix_(s, n); }

  double unitarity_residual() const { return kernels::unitarity_residual(matrix_); }

 private:
  ComplexMatrix matrix_;
};

// N = 0 throws DimensionError.
DualityMap build_duality_map(std::size_t dim);

StateVector to_ontological(const StateVector& state, const DualityMap& map);
StateVector to_energy(const StateVector& state, const DualityMap& map);

// The circle sites phi_s = 2 pi s / N.
class AngleGrid {
 public:
  explicit AngleGrid(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  double spacing() const noexcept;
  double angle(std::size_t s) const;
  std::vector<double> angles() const;

 private:
  std::size_t dim_;
};

}  // namespace circdual
