#pragma once

// Deterministic circle motion and its quantum counterpart.
//
// A site label s advances by one every stroboscopic step dt = 2 pi / (N omega).
// Energy amplitudes pick up e^{-i n omega t}; with the duality map this sends
// |s>^ont to |s + k>^ont after k steps, so Born weights over the sites are
// carried around the circle exactly like the classical angle.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "circdual/hilbert.hpp"

namespace circdual {

class CirclePhase {
 public:
  CirclePhase() = default;
  // Any finite angle; stored reduced to [0, 2 pi).
  explicit CirclePhase(double phi);

  double value() const noexcept { return phi_; }

 private:
  double phi_ = 0.0;
};

CirclePhase evolve_classical(CirclePhase phase, double t, double omega = 1.0);

// Energy-basis evolution: amplitude n times e^{-i n omega t}.
StateVector evolve_quantum(const StateVector& state, double t, double omega = 1.0);

class AngleDistribution {
 public:
  // Weights must be nonnegative and sum to 1 within 1e-12.
  explicit AngleDistribution(std::vector<double> weights);

  static AngleDistribution uniform(std::size_t dim);
  static AngleDistribution point_mass(std::size_t dim, std::size_t site);

  std::size_t dim() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }
  double operator[](std::size_t s) const { return weights_[s]; }
  double total() const noexcept;
  double max_abs_diff(const AngleDistribution& other) const;

  friend bool operator==(const AngleDistribution&, const AngleDistribution&) = default;

 private:
  std::vector<double> weights_;
};

// Weights |<s|psi>|^2. Energy-basis states are mapped through `map` first.
// Throws NormalizationError if |norm^2 - 1| > 1e-9.
AngleDistribution born_distribution(const StateVector& state, const DualityMap& map);

// Nearest stroboscopic step for time t.
struct StroboscopicStep {
  std::int64_t steps;  // k, possibly negative
  double offset;       // t N omega / (2 pi) - k, in units of one step
  bool exact(double tol = 1e-9) const noexcept;
};

StroboscopicStep stroboscopic_step(double t, std::size_t dim, double omega = 1.0);

// Rotates the weights by the nearest whole number of sites, weights'[s + k] = weights[s].
// Between grid times the fractional part is reported by stroboscopic_step, not interpolated.
AngleDistribution transport_distribution(const AngleDistribution& rho, double t,
                                         double omega = 1.0);
AngleDistribution shift_sites(const AngleDistribution& rho, std::int64_t steps);

// Max-norm gap between the Born weights of the quantum-evolved state and the
// classically transported initial weights, at t = 2 pi k / (N omega).
double duality_check(const StateVector& state, std::int64_t steps, double omega = 1.0);

// Same, with a caller-supplied map (must match the state's dimension).
double duality_check(const StateVector& state, std::int64_t steps, const DualityMap& map,
                     double omega = 1.0);

// Worst duality_check over k = 0..max_steps. OpenMP over k, with a serial reference.
double duality_sweep(const StateVector& state, std::int64_t max_steps, const DualityMap& map);
double duality_sweep_serial(const StateVector& state, std::int64_t max_steps,
                            const DualityMap& map);

// Born-weight gap at an arbitrary time against the nearest-site transport.
double non_stroboscopic_deviation(const StateVector& state, double t, const DualityMap& map,
                                  double omega = 1.0);

class OscillatorBank {
 public:
  OscillatorBank(std::vector<double> omegas, std::vector<CirclePhase> phases);

  std::size_t count() const noexcept { return omegas_.size(); }
  std::span<const double> omegas() const noexcept { return omegas_; }
  std::span<const CirclePhase> phases() const noexcept { return phases_; }

 private:
  std::vector<double> omegas_;
  std::vector<CirclePhase> phases_;
};

OscillatorBank evolve_bank(const OscillatorBank& bank, double t);

}  // namespace circdual
