// Acceptance run: one PASS/FAIL line per criterion, with the measured value,
// the threshold it was held to, and wall time.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "circdual/auxfun.hpp"
#include "circdual/dynamics.hpp"
#include "circdual/hilbert.hpp"
#include "circdual/operators.hpp"
#include "oracles.hpp"

#ifndef CIRCDUAL_CLI_PATH
#error "CIRCDUAL_CLI_PATH must point at the CLI executable"
#endif

using namespace circdual;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v{false, ""};
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) {
    v.pass = false;
    v.detail += fmt("; over time budget %.0f s", budget_s);
  }
  if (!v.pass) ++failures;
  std::printf("%s  criterion %2d  %-34s %s  [%.2f s]\n", v.pass ? "PASS" : "FAIL", id, name,
              v.detail.c_str(), secs);
  std::fflush(stdout);
}

double max_diff(const OperatorMatrix& m, const oracle::Dense& d) {
  double worst = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) worst = std::max(worst, std::abs(m(r, c) - d[r][c]));
  return worst;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

int main() {
  criterion(1, "duality map unitarity", 5.0, [] {
    double worst = 0.0;
    for (std::size_t n : {1, 2, 3, 11, 64, 256, 1024}) worst = std::max(worst, DualityMap(n).unitarity_residual());
    return Verdict{worst <= 1e-12, fmt("max |U^dag U - I| = %.3g (<= 1e-12)", worst)};
  });

  criterion(2, "spectrum N = 11", 0, [] {
    const auto h = build_hamiltonian({11, 1.0});
    bool exact = true;
    for (std::size_t k = 0; k < 11; ++k) exact = exact && h(k, k) == Complex(static_cast<double>(k));
    const auto ev = hermitian_eigenvalues(conjugate_to_ontological(h, DualityMap(11)));
    double worst = 0.0;
    for (std::size_t k = 0; k < 11; ++k) worst = std::max(worst, std::abs(ev[k] - static_cast<double>(k)));
    return Verdict{exact && worst <= 1e-9,
                   std::string(exact ? "levels exactly 0..10" : "levels NOT exact") +
                       fmt(", ontological eigenvalue gap %.3g (<= 1e-9)", worst)};
  });

  criterion(3, "stroboscopic duality theorem", 60.0, [] {
    double worst = 0.0;
    std::size_t checks = 0;
    for (std::size_t n : {2, 3, 11, 64, 256}) {
      const DualityMap map(n);
      std::mt19937_64 rng(1000 + n);
      for (int trial = 0; trial < 100; ++trial) {
        const auto state = StateVector::random(Basis::Energy, n, rng);
        worst = std::max(worst, duality_sweep(state, static_cast<std::int64_t>(2 * n), map));
        checks += 2 * n + 1;
      }
    }
    return Verdict{worst <= 1e-10, fmt("max deviation %.3g (<= 1e-10) over %.0f checks", worst,
                                       static_cast<double>(checks))};
  });

  criterion(4, "closed-form matrix elements", 0, [] {
    double worst = 0.0;
    const Complex i(0.0, 1.0);
    for (std::size_t n : {2, 16, 64, 256}) {
      const auto a = oracle::annihilation(n);
      const auto adag = oracle::adjoint(a);
      oracle::Dense x(n, std::vector<Complex>(n)), p = x;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          x[r][c] = (a[r][c] + adag[r][c]) / std::sqrt(2.0);
          p[r][c] = i * (adag[r][c] - a[r][c]) / std::sqrt(2.0);
        }
      const std::pair<LadderOp, const oracle::Dense*> ops[] = {
          {LadderOp::A, &a}, {LadderOp::Adag, &adag}, {LadderOp::X, &x}, {LadderOp::P, &p}};
      for (const auto& [op, dense] : ops) {
        const auto want = oracle::conjugate(*dense);
        for (std::size_t s1 = 0; s1 < n; ++s1)
          for (std::size_t s2 = 0; s2 < n; ++s2)
            worst = std::max(worst, std::abs(ontological_element(op, n, s1, s2) - want[s1][s2]));
      }
    }
    return Verdict{worst <= 1e-10, fmt("max |closed form - U Op U^dag| = %.3g (<= 1e-10)", worst)};
  });

  criterion(5, "hermiticity and reality", 0, [] {
    double herm = 0.0;
    for (std::size_t n : {1, 2, 3, 16, 64, 128, 256}) {
      herm = std::max(herm, ontological_matrix(LadderOp::X, n).hermiticity_residual());
      herm = std::max(herm, ontological_matrix(LadderOp::P, n).hermiticity_residual());
    }
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> radius(0.0, 1.0), angle(-kPi, kPi);
    double reality = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const Complex z = std::polar(std::sqrt(radius(rng)) * 0.999999, angle(rng));
      reality = std::max(reality, std::abs(std::conj(eval_G(z).value) - eval_G(std::conj(z)).value));
    }
    return Verdict{herm <= 1e-12 && reality <= 1e-12,
                   fmt("hermiticity residual %.3g, |conj G(z) - G(conj z)| %.3g (both <= 1e-12)", herm, reality)};
  });

  criterion(6, "truncation commutator", 0, [] {
    double worst = 0.0;
    const Complex i(0.0, 1.0);
    for (std::size_t n : {2, 4, 64}) {
      const auto a = oracle::annihilation(n);
      const auto adag = oracle::adjoint(a);
      oracle::Dense x(n, std::vector<Complex>(n)), p = x;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          x[r][c] = (a[r][c] + adag[r][c]) / std::sqrt(2.0);
          p[r][c] = i * (adag[r][c] - a[r][c]) / std::sqrt(2.0);
        }
      const auto xp = oracle::multiply(x, p), px = oracle::multiply(p, x);
      oracle::Dense want(n, std::vector<Complex>(n));
      for (std::size_t k = 0; k < n; ++k) want[k][k] = i;
      want[n - 1][n - 1] = i * (1.0 - static_cast<double>(n));
      const auto lib = build_xp(n);
      const auto comm = commutator(lib.x, lib.p);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          worst = std::max(worst, std::abs(xp[r][c] - px[r][c] - want[r][c]));
          worst = std::max(worst, std::abs(comm(r, c) - want[r][c]));
        }
    }
    return Verdict{worst <= 1e-10, fmt("max |[x,p] - i(I - N E)| = %.3g (<= 1e-10)", worst)};
  });

  criterion(7, "F / f evaluation", 0, [] {
    const double zeta = oracle::zeta_three_halves();
    const double at_zero = std::abs(eval_f(0.0).value - zeta);
    const double im_pi = std::abs(eval_f(kPi).value.imag());
    double symmetry = 0.0;
    for (int k = 0; k < 100; ++k) {
      const double phi = -kPi + 2.0 * kPi * (k + 0.5) / 100.0;
      symmetry = std::max(symmetry, std::abs(eval_f(-phi).value - std::conj(eval_f(phi).value)));
    }
    const bool ok = at_zero <= 1e-8 && im_pi <= 1e-8 && symmetry <= 1e-8;
    return Verdict{ok, fmt("|f(0) - zeta(3/2)| %.3g, |Im f(pi)| %.3g", at_zero, im_pi) +
                           fmt(", max |f(-phi) - conj f(phi)| %.3g (all <= 1e-8)", symmetry)};
  });

  criterion(8, "g series vs -f'' finite difference", 0, [] {
    int agree = 0;
    double worst_ratio = 0.0;
    for (int k = 0; k < 50; ++k) {
      // 25 angles on each side, spread over 0.1 <= |phi| <= pi.
      const double mag = 0.1 + (kPi - 0.1) * (k / 2) / 24.0;
      const double phi = (k % 2 == 0) ? mag : -mag;
      const auto check = cross_check_g(phi);
      agree += check.agree();
      worst_ratio = std::max(worst_ratio, check.difference / check.tolerance);
    }
    return Verdict{agree == 50, fmt("%.0f/50 angles agree, worst difference/tolerance %.3g", agree, worst_ratio)};
  });

  criterion(9, "sheet algebra", 0, [] {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> radius(0.0, 0.95), angle(-kPi, kPi);
    double round_trip = 0.0, product = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const Complex z = std::polar(radius(rng), angle(rng));
      const Complex y = map_y(z);
      round_trip = std::max(round_trip, std::abs(map_z(y, Sheet::First) - z));
      if (z != 0.0)
        product = std::max(product, std::abs(map_z(y, Sheet::First) * map_z(y, Sheet::Second) - 1.0));
    }
    double boundary = 0.0;
    for (int k = 0; k < 16; ++k) {
      const double phi = -kPi + 2.0 * kPi * (k + 0.5) / 16.0;
      const Complex inside = abel_boundary_value(0.5, phi, Sheet::First).value;
      const Complex outside = abel_boundary_value(0.5, phi, Sheet::Second).value;
      boundary = std::max(boundary, std::abs(outside - std::conj(inside)));
    }
    const bool ok = round_trip <= 1e-12 && product <= 1e-12 && boundary <= 1e-4;
    return Verdict{ok, fmt("round trip %.3g, sheet product %.3g (<= 1e-12)", round_trip, product) +
                           fmt(", Abel boundary match %.3g (<= 1e-4)", boundary)};
  });

  criterion(10, "zeros of G_N", 120.0, [] {
    bool ok = true;
    std::string detail;
    double previous = -1.0;
    for (std::size_t n : {16, 64, 256}) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto zs = find_zeros(n);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const double bound = 1e-8 * zs.coefficient_sum;
      const double frac = zs.fraction_near_unit_circle(0.1);
      ok = ok && zs.roots.size() == n && zs.residual <= bound && frac >= previous;
      previous = frac;
      detail += "N=" + std::to_string(n) + fmt(": residual %.2g <= %.2g", zs.residual, bound) +
                fmt(", near-circle %.4f (%.2f s); ", frac, secs);
    }
    detail += "fraction nondecreasing";
    return Verdict{ok, detail};
  });

  criterion(11, "CLI determinism", 0, [] {
    const std::string cli = CIRCDUAL_CLI_PATH;
    const std::vector<std::string> commands = {"spectrum", "map-domains", "f-curve",
                                               "duality-check --n 11 --trials 100 --seed 3"};
    bool ok = true;
    std::string detail;
    for (std::size_t c = 0; c < commands.size(); ++c) {
      std::string runs[2];
      double slowest = 0.0;
      for (int r = 0; r < 2; ++r) {
        const std::string path = "acceptance_cli_" + std::to_string(c) + "_" + std::to_string(r) + ".out";
        const std::string line = "\"" + cli + "\" " + commands[c] + " --out " + path;
        const auto t0 = std::chrono::steady_clock::now();
        const int status = std::system(line.c_str());
        slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        runs[r] = slurp(path);
        std::remove(path.c_str());
        ok = ok && status == 0 && !runs[r].empty();
      }
      const bool same = runs[0] == runs[1];
      const bool fast = c == 3 || slowest < 30.0;
      ok = ok && same && fast;
      detail += commands[c].substr(0, commands[c].find(' ')) + (same ? " identical" : " DIFFERS") +
                fmt(" (%.2f s)", slowest) + (c + 1 < commands.size() ? ", " : "");
    }
    return Verdict{ok, detail};
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
