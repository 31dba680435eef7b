#include "circdual/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace circdual {

std::string_view to_string(Basis basis) noexcept {
  return basis == Basis::Energy ? "energy" : "ontological";
}

void require_same_basis(Basis lhs, Basis rhs, std::string_view context) {
  if (lhs != rhs)
    throw BasisMismatch(std::string(context) + ": basis mismatch (" +
                        std::string(to_string(lhs)) + " vs " + std::string(to_string(rhs)) + ")");
}

StateVector::StateVector(Basis basis, std::vector<Complex> amplitudes)
    : basis_(basis), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw DimensionError("StateVector: dimension must be at least 1");
}

StateVector StateVector::basis_state(Basis basis, std::size_t dim, std::size_t index) {
  if (dim == 0) throw DimensionError("basis_state: dimension must be at least 1");
  if (index >= dim)
    throw IndexError("basis_state: index " + std::to_string(index) + " out of range for N = " +
                     std::to_string(dim));
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return {basis, std::move(amps)};
}

StateVector StateVector::random(Basis basis, std::size_t dim, std::mt19937_64& rng) {
  if (dim == 0) throw DimensionError("random: dimension must be at least 1");
  std::normal_distribution<double> gauss;
  std::vector<Complex> amps(dim);
  for (auto& a : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    a = {re, im};
  }
  return StateVector(basis, std::move(amps)).normalized();
}

double StateVector::norm_squared() const noexcept {
  double acc = 0.0;
  for (const auto& a : amplitudes_) acc += std::norm(a);
  return acc;
}

bool StateVector::is_normalized(double tol) const noexcept {
  return std::abs(norm_squared() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
  const double n = std::sqrt(norm_squared());
  if (n == 0.0) throw NormalizationError("normalized: zero vector");
  StateVector out = *this;
  out *= 1.0 / n;
  return out;
}

Complex StateVector::inner(const StateVector& other) const {
  require_same_basis(basis_, other.basis_, "inner");
  if (dim() != other.dim()) throw DimensionError("inner: dimension mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) acc += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  return acc;
}

double StateVector::max_abs_diff(const StateVector& other) const {
  require_same_basis(basis_, other.basis_, "max_abs_diff");
  if (dim() != other.dim()) throw DimensionError("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < dim(); ++i)
    worst = std::max(worst, std::abs(amplitudes_[i] - other.amplitudes_[i]));
  return worst;
}

StateVector& StateVector::operator+=(const StateVector& other) {
  require_same_basis(basis_, other.basis_, "operator+");
  if (dim() != other.dim()) throw DimensionError("operator+: dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) amplitudes_[i] += other.amplitudes_[i];
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
  require_same_basis(basis_, other.basis_, "operator-");
  if (dim() != other.dim()) throw DimensionError("operator-: dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) amplitudes_[i] -= other.amplitudes_[i];
  return *this;
}

StateVector& StateVector::operator*=(Complex factor) noexcept {
  for (auto& a : amplitudes_) a *= factor;
  return *this;
}

DualityMap::DualityMap(std::size_t dim) : matrix_(dim) {
  if (dim == 0) throw DimensionError("DualityMap: dimension must be at least 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  const double step = 2.0 * std::numbers::pi / static_cast<double>(dim);
  // Reduce n*s mod N before forming the angle so every entry is one of the
  // N exact roots of unity.
  std::vector<Complex> roots(dim);
  for (std::size_t k = 0; k < dim; ++k) roots[k] = std::polar(scale, step * static_cast<double>(k));
  for (std::size_t s = 0; s < dim; ++s)
    for (std::size_t n = 0; n < dim; ++n) matrix_(s, n) = roots[(n * s) % dim];
}

DualityMap build_duality_map(std::size_t dim) { return DualityMap(dim); }

namespace {

void check_transform(const StateVector& state, const DualityMap& map, Basis expected,
                     const char* name) {
  if (state.basis() != expected)
    throw BasisMismatch(std::string(name) + ": input must be in the " +
                        std::string(to_string(expected)) + " basis");
  if (state.dim() != map.dim())
    throw DimensionError(std::string(name) + ": state has N = " + std::to_string(state.dim()) +
                         ", map has N = " + std::to_string(map.dim()));
}

}  // namespace

StateVector to_ontological(const StateVector& state, const DualityMap& map) {
  check_transform(state, map, Basis::Energy, "to_ontological");
  std::vector<Complex> out(state.dim());
  kernels::matvec(map.matrix(), state.amplitudes(), out);
  return {Basis::Ontological, std::move(out)};
}

StateVector to_energy(const StateVector& state, const DualityMap& map) {
  check_transform(state, map, Basis::Ontological, "to_energy");
  std::vector<Complex> out(state.dim());
  kernels::adjoint_matvec(map.matrix(), state.amplitudes(), out);
  return {Basis::Energy, std::move(out)};
}

AngleGrid::AngleGrid(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw DimensionError("AngleGrid: dimension must be at least 1");
}

double AngleGrid::spacing() const noexcept {
  return 2.0 * std::numbers::pi / static_cast<double>(dim_);
}

double AngleGrid::angle(std::size_t s) const {
  if (s >= dim_) throw IndexError("AngleGrid: site index out of range");
  return spacing() * static_cast<double>(s);
}

std::vector<double> AngleGrid::angles() const {
  std::vector<double> out(dim_);
  for (std::size_t s = 0; s < dim_; ++s) out[s] = spacing() * static_cast<double>(s);
  return out;
}

}  // namespace circdual
