#include "app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "circdual/auxfun.hpp"
#include "circdual/dynamics.hpp"
#include "circdual/figure.hpp"
#include "circdual/hilbert.hpp"
#include "circdual/operators.hpp"

namespace circdual::cli {
namespace {

enum class Format { Csv, Json };

struct CommonOptions {
  std::string out_path;
  std::string format;  // empty: infer
  std::string timestamp = std::string(kDefaultTimestamp);
};

// A command either returns data (possibly with failed invariants) or throws.
struct Outcome {
  FigureData data;
  bool passed = true;
  std::string violation;
};

struct DualityOptions {
  std::size_t n = 11;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  double omega = 1.0;
  std::int64_t max_steps = -1;  // default 2N
  double tolerance = 1e-10;
};

struct SpectrumOptions {
  std::size_t n = 11;
  double omega = 1.0;
  double tolerance = 1e-9;
};

struct MatrixElementOptions {
  std::size_t n = 16;
  std::string op = "x";
  double tolerance = 1e-10;
};

struct AuxfunOptions {
  std::string fn = "f";
  double re = 0.0;
  double im = 0.0;
  double phi = 1.0;
  std::size_t n = 8;
  int sheet = 1;
  std::string side;
  double abs_tol = 1e-13;
};

struct ZerosOptions {
  std::size_t n = 64;
  double band = 0.1;
};

struct DomainOptions {
  std::vector<double> radii = default_domain_radii();
  std::size_t samples = 360;
};

struct CurveOptions {
  std::size_t samples = 720;
  double abs_tol = 1e-13;
};

struct EvolveOptions {
  std::size_t n = 11;
  double omega = 1.0;
  std::int64_t steps = 1;
  std::optional<double> time;
  std::string state = "random";
  std::uint64_t seed = 0;
  double tolerance = 1e-10;
};

std::vector<double> to_doubles(std::size_t count, auto&& fn) {
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = fn(i);
  return v;
}

Outcome run_duality(const DualityOptions& o) {
  const std::int64_t max_steps = o.max_steps < 0 ? 2 * static_cast<std::int64_t>(o.n) : o.max_steps;
  const auto map = build_duality_map(o.n);
  std::mt19937_64 rng(o.seed);
  std::vector<double> trial, deviation;
  double worst = 0.0;
  for (std::size_t i = 0; i < o.trials; ++i) {
    const auto state = StateVector::random(Basis::Energy, o.n, rng);
    double d = 0.0;
    for (std::int64_t k = 0; k <= max_steps; ++k) d = std::max(d, duality_check(state, k, map, o.omega));
    trial.push_back(static_cast<double>(i));
    deviation.push_back(d);
    worst = std::max(worst, d);
  }
  Outcome r;
  r.data.command = "duality-check";
  r.data.parameters = {{"n", static_cast<std::int64_t>(o.n)},
                       {"trials", static_cast<std::int64_t>(o.trials)},
                       {"seed", static_cast<std::int64_t>(o.seed)},
                       {"omega", o.omega},
                       {"max_steps", max_steps},
                       {"tolerance", o.tolerance}};
  r.passed = worst <= o.tolerance;
  r.data.summary = {{"max_deviation", worst}, {"passed", r.passed}};
  r.data.add_column("trial", std::move(trial));
  r.data.add_column("max_deviation", std::move(deviation));
  if (!r.passed) r.violation = "duality deviation " + format_number(worst) + " exceeds tolerance";
  return r;
}

Outcome run_spectrum(const SpectrumOptions& o) {
  Outcome r{emit_spectrum(o.n, o.omega), true, {}};
  const auto h = conjugate_to_ontological(build_hamiltonian({o.n, o.omega}), build_duality_map(o.n));
  const auto ev = hermitian_eigenvalues(h);
  const auto& energy = r.data.column("energy");
  double worst = 0.0;
  for (std::size_t k = 0; k < o.n; ++k) worst = std::max(worst, std::abs(ev[k] - energy[k]));
  r.data.add_column("ontological_eigenvalue", ev);
  r.data.parameters.emplace_back("tolerance", o.tolerance);
  r.passed = worst <= o.tolerance;
  r.data.summary = {{"max_eigenvalue_deviation", worst}, {"passed", r.passed}};
  if (!r.passed) r.violation = "ontological spectrum deviates by " + format_number(worst);
  return r;
}

Outcome run_matrix_elements(const MatrixElementOptions& o) {
  const LadderOp op = parse_ladder_op(o.op);
  const auto conjugated = conjugate_to_ontological(energy_matrix(op, o.n), build_duality_map(o.n));
  std::vector<double> s1, s2, re_c, im_c, re_u, im_u, diff;
  double worst = 0.0;
  for (std::size_t a = 0; a < o.n; ++a)
    for (std::size_t b = 0; b < o.n; ++b) {
      const Complex closed = ontological_element(op, o.n, a, b);
      const Complex brute = conjugated(a, b);
      s1.push_back(static_cast<double>(a));
      s2.push_back(static_cast<double>(b));
      re_c.push_back(closed.real());
      im_c.push_back(closed.imag());
      re_u.push_back(brute.real());
      im_u.push_back(brute.imag());
      diff.push_back(std::abs(closed - brute));
      worst = std::max(worst, diff.back());
    }
  Outcome r;
  r.data.command = "matrix-elements";
  r.data.parameters = {{"n", static_cast<std::int64_t>(o.n)}, {"op", o.op}, {"tolerance", o.tolerance}};
  r.passed = worst <= o.tolerance;
  r.data.summary = {{"max_abs_diff", worst}, {"passed", r.passed}};
  r.data.add_column("s1", std::move(s1));
  r.data.add_column("s2", std::move(s2));
  r.data.add_column("re_closed", std::move(re_c));
  r.data.add_column("im_closed", std::move(im_c));
  r.data.add_column("re_conjugated", std::move(re_u));
  r.data.add_column("im_conjugated", std::move(im_u));
  r.data.add_column("abs_diff", std::move(diff));
  if (!r.passed) r.violation = "closed form and conjugation differ by " + format_number(worst);
  return r;
}

CutSide parse_side(const std::string& side) {
  if (side.empty()) return CutSide::Unspecified;
  if (side == "above") return CutSide::Above;
  if (side == "below") return CutSide::Below;
  throw std::invalid_argument("side must be 'above' or 'below'");
}

Outcome run_auxfun(const AuxfunOptions& o) {
  const Complex z(o.re, o.im);
  const SeriesAccuracy acc{o.abs_tol};
  const Sheet sheet = o.sheet == 2 ? Sheet::Second : Sheet::First;
  SeriesValue v{};
  if (o.fn == "GN") v = {eval_GN(o.n, z), 0.0};
  else if (o.fn == "G") v = eval_G(z, acc);
  else if (o.fn == "G2") v = eval_G_sheet2(z, acc);
  else if (o.fn == "F") v = eval_F(z, acc);
  else if (o.fn == "F2") v = eval_F_sheet2(z, acc);
  else if (o.fn == "f") v = eval_f(o.phi, acc);
  else if (o.fn == "g") v = eval_g(o.phi, acc);
  else if (o.fn == "g-fd") v = g_finite_difference(o.phi, 1e-3, acc);
  else if (o.fn == "y") v = {map_y(z), 0.0};
  else if (o.fn == "z") v = {map_z(z, sheet, parse_side(o.side)), 0.0};
  else throw std::invalid_argument("unknown function '" + o.fn + "'");

  Outcome r;
  r.data.command = "auxfun-eval";
  r.data.parameters = {{"fn", o.fn}, {"re", o.re}, {"im", o.im}, {"phi", o.phi},
                       {"n", static_cast<std::int64_t>(o.n)}, {"sheet", static_cast<std::int64_t>(o.sheet)},
                       {"side", o.side}, {"abs_tol", o.abs_tol}};
  r.data.add_column("re", {v.value.real()});
  r.data.add_column("im", {v.value.imag()});
  r.data.add_column("error", {v.error});
  return r;
}

Outcome run_zeros(const ZerosOptions& o) {
  const auto zs = find_zeros(o.n);
  const double bound = 1e-8 * zs.coefficient_sum;
  Outcome r;
  r.data.command = "zeros";
  r.data.parameters = {{"n", static_cast<std::int64_t>(o.n)}, {"band", o.band}};
  r.passed = zs.residual <= bound;
  r.data.summary = {{"residual", zs.residual},
                    {"residual_bound", bound},
                    {"coefficient_sum", zs.coefficient_sum},
                    {"near_unit_circle", static_cast<std::int64_t>(zs.count_near_unit_circle(o.band))},
                    {"passed", r.passed}};
  const auto& roots = zs.roots;
  r.data.add_column("re", to_doubles(roots.size(), [&](std::size_t i) { return roots[i].real(); }));
  r.data.add_column("im", to_doubles(roots.size(), [&](std::size_t i) { return roots[i].imag(); }));
  r.data.add_column("modulus", to_doubles(roots.size(), [&](std::size_t i) { return std::abs(roots[i]); }));
  r.data.add_column("arg", to_doubles(roots.size(), [&](std::size_t i) { return std::arg(roots[i]); }));
  r.data.add_column("residual", to_doubles(roots.size(), [&](std::size_t i) {
                      return std::abs(eval_GN(o.n, roots[i]));
                    }));
  if (!r.passed) r.violation = "root residual " + format_number(zs.residual) + " exceeds bound";
  return r;
}

Outcome run_domains(const DomainOptions& o) { return {emit_domain_map(o.radii, o.samples), true, {}}; }

Outcome run_curve(const CurveOptions& o) {
  Outcome r{emit_f_curve(o.samples, SeriesAccuracy{o.abs_tol}), true, {}};
  // Im f vanishes at phi = +-pi (first and last rows).
  const auto& im = r.data.column("im_f");
  const double at_pi = std::max(std::abs(im.front()), std::abs(im.back()));
  r.passed = at_pi <= 1e-8;
  r.data.summary.emplace_back("abs_im_f_at_pi", at_pi);
  r.data.summary.emplace_back("passed", r.passed);
  if (!r.passed) r.violation = "Im f(pi) = " + format_number(at_pi) + " is not zero";
  return r;
}

StateVector initial_state(const EvolveOptions& o, const DualityMap& map) {
  const auto colon = o.state.find(':');
  const std::string kind = o.state.substr(0, colon);
  if (kind == "random") {
    std::mt19937_64 rng(o.seed);
    return StateVector::random(Basis::Energy, o.n, rng);
  }
  if (colon == std::string::npos) throw std::invalid_argument("state must be random, energy:<n> or ont:<s>");
  const auto index = static_cast<std::size_t>(std::stoull(o.state.substr(colon + 1)));
  if (kind == "energy") return StateVector::basis_state(Basis::Energy, o.n, index);
  if (kind == "ont") return to_energy(StateVector::basis_state(Basis::Ontological, o.n, index), map);
  throw std::invalid_argument("state must be random, energy:<n> or ont:<s>");
}

Outcome run_evolve(const EvolveOptions& o) {
  const auto map = build_duality_map(o.n);
  const auto state = initial_state(o, map);
  const double t = o.time ? *o.time
                          : 2.0 * std::numbers::pi * static_cast<double>(o.steps) /
                                (static_cast<double>(o.n) * o.omega);
  const auto step = stroboscopic_step(t, o.n, o.omega);
  const auto initial = born_distribution(state, map);
  const auto quantum = born_distribution(evolve_quantum(state, t, o.omega), map);
  const auto transported = transport_distribution(initial, t, o.omega);
  const double deviation = quantum.max_abs_diff(transported);

  Outcome r;
  r.data.command = "evolve";
  r.data.parameters = {{"n", static_cast<std::int64_t>(o.n)}, {"omega", o.omega}, {"time", t},
                       {"state", o.state}, {"seed", static_cast<std::int64_t>(o.seed)},
                       {"tolerance", o.tolerance}};
  const bool stroboscopic = step.exact();
  r.passed = !stroboscopic || deviation <= o.tolerance;
  r.data.summary = {{"steps", step.steps},
                    {"step_offset", step.offset},
                    {"stroboscopic", stroboscopic},
                    {"deviation", deviation},
                    {"passed", r.passed}};
  r.data.add_column("site", to_doubles(o.n, [](std::size_t s) { return static_cast<double>(s); }));
  r.data.add_column("initial", to_doubles(o.n, [&](std::size_t s) { return initial[s]; }));
  r.data.add_column("quantum", to_doubles(o.n, [&](std::size_t s) { return quantum[s]; }));
  r.data.add_column("transported", to_doubles(o.n, [&](std::size_t s) { return transported[s]; }));
  if (!r.passed) r.violation = "stroboscopic deviation " + format_number(deviation) + " exceeds tolerance";
  return r;
}

Format resolve_format(const CommonOptions& c, Format fallback) {
  if (c.format == "csv") return Format::Csv;
  if (c.format == "json") return Format::Json;
  auto ends_with = [&](std::string_view suffix) {
    return c.out_path.size() >= suffix.size() &&
           c.out_path.compare(c.out_path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".json")) return Format::Json;
  if (ends_with(".csv")) return Format::Csv;
  return fallback;
}

void report_error(std::ostream& err, const std::string& command, const std::string& kind,
                  const std::string& message) {
  nlohmann::ordered_json report;
  report["error"] = {{"command", command}, {"kind", kind}, {"message", message}};
  err << report.dump(2) << "\n";
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const DimensionError*>(&e)) return "dimension";
  if (dynamic_cast<const BasisMismatch*>(&e)) return "basis";
  if (dynamic_cast<const IndexError*>(&e)) return "index";
  if (dynamic_cast<const NormalizationError*>(&e)) return "normalization";
  if (dynamic_cast<const SingularityError*>(&e)) return "singularity";
  if (dynamic_cast<const PoleError*>(&e)) return "pole";
  if (dynamic_cast<const BranchCutError*>(&e)) return "branch-cut";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  if (dynamic_cast<const ConvergenceError*>(&e)) return "convergence";
  if (dynamic_cast<const RootFinderError*>(&e)) return "root-finder";
  return "invalid-argument";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oscillator / circle duality toolkit", "circdual"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  CommonOptions common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out,-o", common.out_path, "Output file (stdout when omitted)");
    sub->add_option("--format", common.format, "csv or json (default from --out extension)")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--timestamp", common.timestamp, "Timestamp recorded in JSON metadata");
  };

  DualityOptions duality;
  auto* dc = app.add_subcommand("duality-check", "Quantum Born weights vs classical transport");
  dc->add_option("--n", duality.n)->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
  dc->add_option("--trials", duality.trials)->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  dc->add_option("--seed", duality.seed);
  dc->add_option("--omega", duality.omega)->check(CLI::PositiveNumber);
  dc->add_option("--max-steps", duality.max_steps, "Largest k checked (default 2N)");
  dc->add_option("--tol", duality.tolerance)->check(CLI::PositiveNumber);
  add_common(dc);

  SpectrumOptions spectrum;
  auto* sp = app.add_subcommand("spectrum", "Energy levels and ontological-basis eigenvalues");
  sp->add_option("--n", spectrum.n)->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
  sp->add_option("--omega", spectrum.omega)->check(CLI::PositiveNumber);
  sp->add_option("--tol", spectrum.tolerance)->check(CLI::PositiveNumber);
  add_common(sp);

  MatrixElementOptions elements;
  auto* me = app.add_subcommand("matrix-elements", "Closed-form ontological matrix elements");
  me->add_option("--n", elements.n)->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
  me->add_option("--op", elements.op)->check(CLI::IsMember({"a", "adag", "x", "p"}));
  me->add_option("--tol", elements.tolerance)->check(CLI::PositiveNumber);
  add_common(me);

  AuxfunOptions aux;
  auto* ae = app.add_subcommand("auxfun-eval", "Evaluate G_N, G, F, f, g or the sheet maps");
  ae->add_option("--fn", aux.fn)
      ->check(CLI::IsMember({"GN", "G", "G2", "F", "F2", "f", "g", "g-fd", "y", "z"}));
  ae->add_option("--re", aux.re);
  ae->add_option("--im", aux.im);
  ae->add_option("--phi", aux.phi);
  ae->add_option("--n", aux.n)->check(CLI::PositiveNumber);
  ae->add_option("--sheet", aux.sheet)->check(CLI::IsMember({1, 2}));
  ae->add_option("--side", aux.side)->check(CLI::IsMember({"above", "below"}));
  ae->add_option("--abs-tol", aux.abs_tol)->check(CLI::Range(1e-14, 1.0));
  add_common(ae);

  ZerosOptions zeros;
  auto* ze = app.add_subcommand("zeros", "All zeros of G_N");
  ze->add_option("--n", zeros.n)->check(CLI::Range(std::size_t{1}, std::size_t{512}));
  ze->add_option("--band", zeros.band)->check(CLI::PositiveNumber);
  add_common(ze);

  DomainOptions domains;
  auto* md = app.add_subcommand("map-domains", "Images of |z| = r under y = 4z/(1+z)^2");
  md->add_option("--radii", domains.radii)->delimiter(',');
  md->add_option("--samples", domains.samples)->check(CLI::Range(std::size_t{8}, std::size_t{1000000}));
  add_common(md);

  CurveOptions curve;
  auto* fc = app.add_subcommand("f-curve", "f(phi) = F(e^{i phi}) on [-pi, pi]");
  fc->add_option("--samples", curve.samples)->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
  fc->add_option("--abs-tol", curve.abs_tol)->check(CLI::Range(1e-14, 1.0));
  add_common(fc);

  EvolveOptions evolve;
  auto* ev = app.add_subcommand("evolve", "Evolve one state and compare with classical transport");
  ev->add_option("--n", evolve.n)->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
  ev->add_option("--omega", evolve.omega)->check(CLI::PositiveNumber);
  auto* steps_opt = ev->add_option("--steps", evolve.steps, "Stroboscopic steps k");
  ev->add_option("--time", evolve.time, "Arbitrary time t")->excludes(steps_opt);
  ev->add_option("--state", evolve.state, "random, energy:<n> or ont:<s>");
  ev->add_option("--seed", evolve.seed);
  ev->add_option("--tol", evolve.tolerance)->check(CLI::PositiveNumber);
  add_common(ev);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  Outcome outcome;
  Format fallback = Format::Csv;
  try {
    if (sub == dc) {
      outcome = run_duality(duality);
      fallback = Format::Json;
    } else if (sub == sp) {
      outcome = run_spectrum(spectrum);
    } else if (sub == me) {
      outcome = run_matrix_elements(elements);
    } else if (sub == ae) {
      outcome = run_auxfun(aux);
    } else if (sub == ze) {
      outcome = run_zeros(zeros);
      fallback = Format::Json;
    } else if (sub == md) {
      outcome = run_domains(domains);
    } else if (sub == fc) {
      outcome = run_curve(curve);
    } else {
      outcome = run_evolve(evolve);
    }
  } catch (const std::exception& e) {
    report_error(err, command, error_kind(e), e.what());
    return kInvariantViolation;
  }

  outcome.data.timestamp = common.timestamp;
  std::ostringstream buffer;
  if (resolve_format(common, fallback) == Format::Json) write_json(outcome.data, buffer);
  else write_csv(outcome.data, buffer);

  if (common.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(common.out_path, std::ios::binary);
    if (!file) {
      report_error(err, command, "io", "cannot open '" + common.out_path + "' for writing");
      return kInvariantViolation;
    }
    file << buffer.str();
  }

  if (!outcome.passed) {
    report_error(err, command, "invariant", outcome.violation);
    return kInvariantViolation;
  }
  return kOk;
}

}  // namespace circdual::cli
