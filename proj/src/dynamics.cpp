#include "circdual/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace circdual {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_positive(double phi) {
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

std::size_t wrap_site(std::int64_t s, std::size_t dim) {
  const auto n = static_cast<std::int64_t>(dim);
  return static_cast<std::size_t>(((s % n) + n) % n);
}

// Energy amplitudes after k steps: amplitude n times e^{-2 pi i n k / N}, with
// n k reduced mod N so the phases are exact roots of unity.
std::vector<Complex> stroboscopic_phases(std::span<const Complex> amps, std::int64_t steps) {
  const std::size_t dim = amps.size();
  std::vector<Complex> out(dim);
  const std::size_t k = wrap_site(steps, dim);
  for (std::size_t n = 0; n < dim; ++n) {
    const double angle = -kTwoPi * static_cast<double>((n * k) % dim) / static_cast<double>(dim);
    out[n] = amps[n] * std::polar(1.0, angle);
  }
  return out;
}

std::vector<double> born_weights(const StateVector& state, const DualityMap& map) {
  if (state.dim() != map.dim()) throw DimensionError("born_distribution: dimension mismatch");
  std::vector<double> w(state.dim());
  if (state.basis() == Basis::Ontological) {
    for (std::size_t s = 0; s < w.size(); ++s) w[s] = std::norm(state[s]);
  } else {
    std::vector<Complex> ont(state.dim());
    kernels::serial::matvec(map.matrix(), state.amplitudes(), ont);
    for (std::size_t s = 0; s < w.size(); ++s) w[s] = std::norm(ont[s]);
  }
  return w;
}

void require_normalized(const StateVector& state, const char* name) {
  if (std::abs(state.norm_squared() - 1.0) > 1e-9)
    throw NormalizationError(std::string(name) + ": state is not normalized (norm^2 = " +
                             std::to_string(state.norm_squared()) + ")");
}

// One duality_check evaluation for an energy-basis state without allocation of
// intermediate StateVector objects; shared by the parallel and serial sweeps.
double duality_gap(const StateVector& energy_state, std::span<const double> initial,
                   std::int64_t steps, const DualityMap& map) {
  const std::size_t dim = energy_state.dim();
  const auto evolved = stroboscopic_phases(energy_state.amplitudes(), steps);
  std::vector<Complex> ont(dim);
  kernels::serial::matvec(map.matrix(), evolved, ont);
  const std::size_t k = wrap_site(steps, dim);
  double worst = 0.0;
  for (std::size_t s = 0; s < dim; ++s) {
    const double transported = initial[(s + dim - k) % dim];
    worst = std::max(worst, std::abs(std::norm(ont[s]) - transported));
  }
  return worst;
}

StateVector as_energy(const StateVector& state, const DualityMap& map) {
  return state.basis() == Basis::Energy ? state : to_energy(state, map);
}

}  // namespace

CirclePhase::CirclePhase(double phi) : phi_(reduce_positive(phi)) {
  if (!std::isfinite(phi)) throw std::invalid_argument("CirclePhase: angle must be finite");
}

CirclePhase evolve_classical(CirclePhase phase, double t, double omega) {
  return CirclePhase(phase.value() + omega * t);
}

StateVector evolve_quantum(const StateVector& state, double t, double omega) {
  if (state.basis() != Basis::Energy)
    throw BasisMismatch("evolve_quantum: state must be in the energy basis");
  std::vector<Complex> out(state.dim());
  for (std::size_t n = 0; n < state.dim(); ++n) {
    // Reduce n*omega*t mod 2 pi before forming the phase.
    const double angle = std::fmod(static_cast<double>(n) * omega * t, kTwoPi);
    out[n] = state[n] * std::polar(1.0, -angle);
  }
  return {Basis::Energy, std::move(out)};
}

AngleDistribution::AngleDistribution(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw DimensionError("AngleDistribution: dimension must be at least 1");
  for (double w : weights_)
    if (!(w >= 0.0)) throw std::invalid_argument("AngleDistribution: negative or NaN weight");
  if (std::abs(total() - 1.0) > 1e-12)
    throw NormalizationError("AngleDistribution: weights sum to " + std::to_string(total()));
}

AngleDistribution AngleDistribution::uniform(std::size_t dim) {
  if (dim == 0) throw DimensionError("AngleDistribution: dimension must be at least 1");
  return AngleDistribution(std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

AngleDistribution AngleDistribution::point_mass(std::size_t dim, std::size_t site) {
  if (site >= dim) throw IndexError("AngleDistribution: site out of range");
  std::vector<double> w(dim, 0.0);
  w[site] = 1.0;
  return AngleDistribution(std::move(w));
}

double AngleDistribution::total() const noexcept {
  double acc = 0.0;
  for (double w : weights_) acc += w;
  return acc;
}

double AngleDistribution::max_abs_diff(const AngleDistribution& other) const {
  if (other.dim() != dim()) throw DimensionError("AngleDistribution: dimension mismatch");
  double worst = 0.0;
  for (std::size_t s = 0; s < dim(); ++s)
    worst = std::max(worst, std::abs(weights_[s] - other.weights_[s]));
  return worst;
}

AngleDistribution born_distribution(const StateVector& state, const DualityMap& map) {
  require_normalized(state, "born_distribution");
  auto w = born_weights(state, map);
  // Renormalize away the <= 1e-9 slack the precondition allows.
  double total = 0.0;
  for (double v : w) total += v;
  for (double& v : w) v /= total;
  return AngleDistribution(std::move(w));
}

bool StroboscopicStep::exact(double tol) const noexcept { return std::abs(offset) <= tol; }

StroboscopicStep stroboscopic_step(double t, std::size_t dim, double omega) {
  if (dim == 0) throw DimensionError("stroboscopic_step: dimension must be at least 1");
  const double sites = t * static_cast<double>(dim) * omega / kTwoPi;
  const double k = std::round(sites);
  return {static_cast<std::int64_t>(k), sites - k};
}

AngleDistribution shift_sites(const AngleDistribution& rho, std::int64_t steps) {
  const std::size_t dim = rho.dim();
  std::vector<double> out(dim);
  for (std::size_t s = 0; s < dim; ++s)
    out[wrap_site(static_cast<std::int64_t>(s) + steps, dim)] = rho[s];
  return AngleDistribution(std::move(out));
}

AngleDistribution transport_distribution(const AngleDistribution& rho, double t, double omega) {
  return shift_sites(rho, stroboscopic_step(t, rho.dim(), omega).steps);
}

double duality_check(const StateVector& state, std::int64_t steps, double omega) {
  return duality_check(state, steps, build_duality_map(state.dim()), omega);
}

double duality_check(const StateVector& state, std::int64_t steps, const DualityMap& map,
                     double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("duality_check: omega must be positive");
  require_normalized(state, "duality_check");
  const double t = kTwoPi * static_cast<double>(steps) / (static_cast<double>(state.dim()) * omega);
  const auto quantum = born_distribution(evolve_quantum(as_energy(state, map), t, omega), map);
  const auto classical = transport_distribution(born_distribution(state, map), t, omega);
  return quantum.max_abs_diff(classical);
}

double duality_sweep(const StateVector& state, std::int64_t max_steps, const DualityMap& map) {
  require_normalized(state, "duality_sweep");
  const StateVector energy = as_energy(state, map);
  const auto initial = born_weights(state, map);
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (std::int64_t k = 0; k <= max_steps; ++k)
    worst = std::max(worst, duality_gap(energy, initial, k, map));
  return worst;
}

double duality_sweep_serial(const StateVector& state, std::int64_t max_steps,
                            const DualityMap& map) {
  require_normalized(state, "duality_sweep");
  const StateVector energy = as_energy(state, map);
  const auto initial = born_weights(state, map);
  double worst = 0.0;
  for (std::int64_t k = 0; k <= max_steps; ++k)
    worst = std::max(worst, duality_gap(energy, initial, k, map));
  return worst;
}

double non_stroboscopic_deviation(const StateVector& state, double t, const DualityMap& map,
                                  double omega) {
  const auto quantum = born_distribution(evolve_quantum(as_energy(state, map), t, omega), map);
  const auto classical = transport_distribution(born_distribution(state, map), t, omega);
  return quantum.max_abs_diff(classical);
}

OscillatorBank::OscillatorBank(std::vector<double> omegas, std::vector<CirclePhase> phases)
    : omegas_(std::move(omegas)), phases_(std::move(phases)) {
  if (omegas_.size() != phases_.size())
    throw DimensionError("OscillatorBank: omegas and phases differ in length");
  for (double w : omegas_)
    if (!(w > 0.0) || !std::isfinite(w))
      throw std::invalid_argument("OscillatorBank: frequencies must be positive");
}

OscillatorBank evolve_bank(const OscillatorBank& bank, double t) {
  std::vector<CirclePhase> next(bank.count());
  for (std::size_t i = 0; i < bank.count(); ++i)
    next[i] = evolve_classical(bank.phases()[i], t, bank.omegas()[i]);
  return {std::vector<double>(bank.omegas().begin(), bank.omegas().end()), std::move(next)};
}

}  // namespace circdual
