#pragma once

// Truncated oscillator operators (hbar = 1). In the energy basis
//   a|n> = sqrt(n)|n-1>,  x = (a + a^dag)/sqrt(2),  p = i(a^dag - a)/sqrt(2),
//   H = omega * a^dag a = diag(0, omega, ..., (N-1) omega).
// Truncation to N levels makes [a, a^dag] = I - N |N-1><N-1|.

#include <cstddef>
#include <string_view>
#include <vector>

#include "circdual/hilbert.hpp"
#include "circdual/kernels.hpp"

namespace circdual {

class OperatorMatrix {
 public:
  OperatorMatrix(Basis basis, ComplexMatrix entries);

  static OperatorMatrix identity(Basis basis, std::size_t dim);
  static OperatorMatrix zero(Basis basis, std::size_t dim);

  std::size_t dim() const noexcept { return entries_.dim(); }
  Basis basis() const noexcept { return basis_; }
  const ComplexMatrix& entries() const noexcept { return entries_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }

  OperatorMatrix adjoint() const;
  // max |M - M^dag|
  double hermiticity_residual() const;
  double max_abs_diff(const OperatorMatrix& other) const;

  StateVector apply(const StateVector& state) const;

  OperatorMatrix& operator+=(const OperatorMatrix& other);
  OperatorMatrix& operator-=(const OperatorMatrix& other);
  OperatorMatrix& operator*=(Complex factor) noexcept;

  friend OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs) {
    return lhs += rhs;
  }
  friend OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs) {
    return lhs -= rhs;
  }
  friend OperatorMatrix operator*(Complex factor, OperatorMatrix m) { return m *= factor; }
  friend OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs);

 private:
  Basis basis_;
  ComplexMatrix entries_;
};

struct OscillatorConfig {
  std::size_t dim = 1;
  double omega = 1.0;

  void validate() const;
};

struct LadderPair {
  OperatorMatrix a;
  OperatorMatrix adag;
};

struct PositionMomentum {
  OperatorMatrix x;
  OperatorMatrix p;
};

LadderPair build_ladder(std::size_t dim);
PositionMomentum build_xp(std::size_t dim);
OperatorMatrix build_hamiltonian(const OscillatorConfig& config);

// U * op * U^dag
OperatorMatrix conjugate_to_ontological(const OperatorMatrix& op, const DualityMap& map);

enum class LadderOp { A, Adag, X, P };

std::string_view to_string(LadderOp op) noexcept;
LadderOp parse_ladder_op(std::string_view name);

// Closed-form ontological matrix element <s1| op |s2> at finite N:
//   a    -> e^{-i phi1} K
//   adag -> e^{+i phi2} K
//   x    -> (e^{-i phi1} + e^{i phi2}) K / sqrt 2
//   p    -> i (e^{i phi2} - e^{-i phi1}) K / sqrt 2
// with K = G_{N-1}(e^{i(phi1 - phi2)}) / N and phi_k = 2 pi s_k / N.
Complex ontological_element(LadderOp op, std::size_t dim, std::size_t s1, std::size_t s2);
OperatorMatrix ontological_matrix(LadderOp op, std::size_t dim);
OperatorMatrix energy_matrix(LadderOp op, std::size_t dim);

OperatorMatrix commutator(const OperatorMatrix& lhs, const OperatorMatrix& rhs);

// Ascending eigenvalues of a hermitian operator.
std::vector<double> hermitian_eigenvalues(const OperatorMatrix& op);

// e^{iHt} op e^{-iHt} for H diagonal in the energy basis.
OperatorMatrix heisenberg_evolve(const OperatorMatrix& op, const OperatorMatrix& hamiltonian,
                                 double t);

}  // namespace circdual
