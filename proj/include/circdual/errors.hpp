#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace circdual {

using Complex = std::complex<double>;

// Dimension is zero, or two objects disagree on N.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Energy and ontological objects were mixed.
class BasisMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NormalizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the region where a function is defined on the requested sheet.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument too close to a divergent point (g at phi = 0, G at z = 1).
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Real y > 1 lies on the cut; the caller must say which side it approaches from.
class BranchCutError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, Complex best_estimate, double error_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  Complex best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  Complex best_estimate_;
  double error_estimate_;
};

class RootFinderError : public std::runtime_error {
 public:
  RootFinderError(const std::string& what, int iterations)
      : std::runtime_error(what), iterations_(iterations) {}

  int iterations() const noexcept { return iterations_; }

 private:
  int iterations_;
};

}  // namespace circdual
