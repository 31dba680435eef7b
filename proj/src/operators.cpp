#include "circdual/operators.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <string>

#include "circdual/auxfun.hpp"

namespace circdual {

OperatorMatrix::OperatorMatrix(Basis basis, ComplexMatrix entries)
    : basis_(basis), entries_(std::move(entries)) {
  if (entries_.dim() == 0) throw DimensionError("OperatorMatrix: dimension must be at least 1");
}

OperatorMatrix OperatorMatrix::identity(Basis basis, std::size_t dim) {
  return {basis, ComplexMatrix::identity(dim)};
}

OperatorMatrix OperatorMatrix::zero(Basis basis, std::size_t dim) {
  return {basis, ComplexMatrix(dim)};
}

OperatorMatrix OperatorMatrix::adjoint() const { return {basis_, entries_.adjoint()}; }

double OperatorMatrix::hermiticity_residual() const {
  return entries_.max_abs_diff(entries_.adjoint());
}

double OperatorMatrix::max_abs_diff(const OperatorMatrix& other) const {
  require_same_basis(basis_, other.basis_, "max_abs_diff");
  return entries_.max_abs_diff(other.entries_);
}

StateVector OperatorMatrix::apply(const StateVector& state) const {
  require_same_basis(basis_, state.basis(), "apply");
  if (state.dim() != dim()) throw DimensionError("apply: dimension mismatch");
  std::vector<Complex> out(dim());
  kernels::matvec(entries_, state.amplitudes(), out);
  return {basis_, std::move(out)};
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& other) {
  require_same_basis(basis_, other.basis_, "operator+");
  if (dim() != other.dim()) throw DimensionError("operator+: dimension mismatch");
  auto dst = entries_.data();
  auto src = other.entries_.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& other) {
  require_same_basis(basis_, other.basis_, "operator-");
  if (dim() != other.dim()) throw DimensionError("operator-: dimension mismatch");
  auto dst = entries_.data();
  auto src = other.entries_.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= src[i];
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(Complex factor) noexcept {
  for (auto& v : entries_.data()) v *= factor;
  return *this;
}

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  require_same_basis(lhs.basis_, rhs.basis_, "operator*");
  return {lhs.basis_, kernels::matmul(lhs.entries_, rhs.entries_)};
}

void OscillatorConfig::validate() const {
  if (dim == 0) throw DimensionError("OscillatorConfig: dimension must be at least 1");
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("OscillatorConfig: omega must be positive and finite");
}

LadderPair build_ladder(std::size_t dim) {
  if (dim == 0) throw DimensionError("build_ladder: dimension must be at least 1");
  ComplexMatrix a(dim);
  for (std::size_t n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  OperatorMatrix op(Basis::Energy, std::move(a));
  auto adag = op.adjoint();
  return {std::move(op), std::move(adag)};
}

PositionMomentum build_xp(std::size_t dim) {
  auto [a, adag] = build_ladder(dim);
  const double r = 1.0 / std::numbers::sqrt2;
  OperatorMatrix x = Complex(r) * (a + adag);
  OperatorMatrix p = Complex(0.0, r) * (adag - a);
  return {std::move(x), std::move(p)};
}

OperatorMatrix build_hamiltonian(const OscillatorConfig& config) {
  config.validate();
  ComplexMatrix h(config.dim);
  for (std::size_t n = 0; n < config.dim; ++n) h(n, n) = config.omega * static_cast<double>(n);
  return {Basis::Energy, std::move(h)};
}

OperatorMatrix conjugate_to_ontological(const OperatorMatrix& op, const DualityMap& map) {
  if (op.basis() != Basis::Energy)
    throw BasisMismatch("conjugate_to_ontological: operator must be in the energy basis");
  if (op.dim() != map.dim()) throw DimensionError("conjugate_to_ontological: dimension mismatch");
  return {Basis::Ontological, kernels::conjugate(map.matrix(), op.entries())};
}

std::string_view to_string(LadderOp op) noexcept {
  switch (op) {
    case LadderOp::A: return "a";
    case LadderOp::Adag: return "adag";
    case LadderOp::X: return "x";
    case LadderOp::P: return "p";
  }
  return "?";
}

LadderOp parse_ladder_op(std::string_view name) {
  if (name == "a") return LadderOp::A;
  if (name == "adag") return LadderOp::Adag;
  if (name == "x") return LadderOp::X;
  if (name == "p") return LadderOp::P;
  throw std::invalid_argument("unknown operator '" + std::string(name) +
                              "' (expected a, adag, x or p)");
}

namespace {

// e^{2 pi i k / N} with k reduced mod N.
Complex site_phase(std::size_t dim, std::ptrdiff_t k) {
  const auto n = static_cast<std::ptrdiff_t>(dim);
  const std::ptrdiff_t r = ((k % n) + n) % n;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
}

}  // namespace

Complex ontological_element(LadderOp op, std::size_t dim, std::size_t s1, std::size_t s2) {
  if (dim == 0) throw DimensionError("ontological_element: dimension must be at least 1");
  if (s1 >= dim || s2 >= dim)
    throw IndexError("ontological_element: site index out of range for N = " +
                     std::to_string(dim));
  if (dim == 1) return 0.0;
  const auto i1 = static_cast<std::ptrdiff_t>(s1);
  const auto i2 = static_cast<std::ptrdiff_t>(s2);
  const Complex kernel = eval_GN(dim - 1, site_phase(dim, i1 - i2)) / static_cast<double>(dim);
  const Complex out_phase = site_phase(dim, -i1);  // e^{-i phi1}
  const Complex in_phase = site_phase(dim, i2);    // e^{+i phi2}
  const double r = 1.0 / std::numbers::sqrt2;
  switch (op) {
    case LadderOp::A: return out_phase * kernel;
    case LadderOp::Adag: return in_phase * kernel;
    case LadderOp::X: return r * (out_phase + in_phase) * kernel;
    case LadderOp::P: return Complex(0.0, r) * (in_phase - out_phase) * kernel;
  }
  return 0.0;
}

OperatorMatrix ontological_matrix(LadderOp op, std::size_t dim) {
  if (dim == 0) throw DimensionError("ontological_matrix: dimension must be at least 1");
  ComplexMatrix m(dim);
  const auto n = static_cast<std::ptrdiff_t>(dim);
#pragma omp parallel for collapse(2) schedule(static)
  for (std::ptrdiff_t s1 = 0; s1 < n; ++s1)
    for (std::ptrdiff_t s2 = 0; s2 < n; ++s2) m(s1, s2) = ontological_element(op, dim, s1, s2);
  return {Basis::Ontological, std::move(m)};
}

OperatorMatrix energy_matrix(LadderOp op, std::size_t dim) {
  switch (op) {
    case LadderOp::A: return build_ladder(dim).a;
    case LadderOp::Adag: return build_ladder(dim).adag;
    case LadderOp::X: return build_xp(dim).x;
    case LadderOp::P: return build_xp(dim).p;
  }
  throw std::invalid_argument("energy_matrix: unknown operator");
}

OperatorMatrix commutator(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw DimensionError("commutator: dimension mismatch");
  return lhs * rhs - rhs * lhs;
}

std::vector<double> hermitian_eigenvalues(const OperatorMatrix& op) {
  const std::size_t n = op.dim();
  Eigen::MatrixXcd m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = op(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

OperatorMatrix heisenberg_evolve(const OperatorMatrix& op, const OperatorMatrix& hamiltonian,
                                 double t) {
  require_same_basis(op.basis(), Basis::Energy, "heisenberg_evolve");
  require_same_basis(hamiltonian.basis(), Basis::Energy, "heisenberg_evolve");
  if (op.dim() != hamiltonian.dim()) throw DimensionError("heisenberg_evolve: dimension mismatch");
  const std::size_t n = op.dim();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c && hamiltonian(r, c) != 0.0)
        throw std::invalid_argument("heisenberg_evolve: hamiltonian must be diagonal");
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const double dE = hamiltonian(r, r).real() - hamiltonian(c, c).real();
      out(r, c) = std::polar(1.0, dE * t) * op(r, c);
    }
  return {Basis::Energy, std::move(out)};
}

}  // namespace circdual
