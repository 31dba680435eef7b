#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "circdual/auxfun.hpp"
#include "oracles.hpp"

using namespace circdual;

namespace {

constexpr double kPi = std::numbers::pi;

// Li_{3/2}(e^{i phi}) and Li_{-1/2}(e^{i phi}) from a 30-digit polylog evaluation.
struct CircleReference {
  double phi;
  Complex f;
  Complex g;
};

const CircleReference kCircle[] = {
    {0.05, {2.0521360870449344498, 0.48748192715258512678}, {-56.257809035922791018, 56.048637811356763756}},
    {0.3, {1.2487962571120702982, 0.93494527010786103814}, {-4.0219840032647397488, 3.8060478709085040994}},
    {1.0, {0.21004942192553099467, 1.0505588471278016211}, {-0.83893450521474513248, 0.60040876853078019166}},
    {2.0, {-0.51078834603889136974, 0.65943605356728362719}, {-0.44881365681338095118, 0.1638589779847075632}},
    {-2.5, {-0.68627982980255125041, -0.38278527053217370798}, {-0.39920061555885036438, -0.080600196315848660317}},
    {3.0, {-0.7613352901859828302, 0.08559300822605201392}, {-0.3809876500365381959, 0.016849895091708063066}},
};

struct DiskReference {
  Complex z;
  Complex F;
  Complex G;
};

const DiskReference kDisk[] = {
    {{0.3, 0.4}, {0.24715013759786080549, 0.48592967194770628082}, {-0.064984789963950298577, 0.67148543445821998651}},
    {{0.6, 0.7}, {0.36741207703337436956, 0.97872900455336708445}, {-0.86952913173375990999, 0.85607340982401330701}},
    {{-0.9, 0.1}, {-0.70472416662149003284, 0.062800362469105100613}, {-0.36838866892550172457, 0.014067229090684792544}},
    {{0.99, 0.0}, {2.2716600770079991348, 0.0}, {879.36980347833878094, 0.0}},
};

}  // namespace

TEST(GN, SingleTerm) {
  const Complex z(0.3, 0.4);
  EXPECT_LT(std::abs(eval_GN(1, z) - z), 1e-16);
}

TEST(GN, VanishesAtOrigin) {
  for (std::size_t n : {1, 5, 100}) EXPECT_EQ(eval_GN(n, 0.0), Complex(0.0));
}

TEST(GN, TwoTermsAtOne) { EXPECT_NEAR(eval_GN(2, 1.0).real(), 2.41421356, 1e-8); }

TEST(GN, MatchesDirectSum) {
  const Complex z(-0.7, 0.55);
  Complex want = 0.0, zn = 1.0;
  for (int n = 1; n <= 40; ++n) {
    zn *= z;
    want += std::sqrt(static_cast<double>(n)) * zn;
  }
  EXPECT_LT(std::abs(eval_GN(40, z) - want), 1e-13);
}

TEST(F, Origin) { EXPECT_EQ(eval_F(0.0).value, Complex(0.0)); }

TEST(F, AtOneIsZetaThreeHalves) {
  const double zeta = oracle::zeta_three_halves();
  EXPECT_NEAR(zeta, 2.6123753486854883433, 1e-12);  // oracle sanity
  const auto v = eval_F(1.0);
  EXPECT_NEAR(v.value.real(), zeta, 1e-8);
  EXPECT_EQ(v.value.imag(), 0.0);
  EXPECT_LT(v.error, 1e-12);
}

TEST(F, AtMinusOneIsAlternatingSum) {
  const double want = oracle::alternating_three_halves();
  EXPECT_NEAR(want, -(1.0 - 1.0 / std::sqrt(2.0)) * 2.6123753486854883433, 1e-12);
  EXPECT_NEAR(eval_F(-1.0).value.real(), want, 1e-12);
}

TEST(F, InteriorReferenceValues) {
  for (const auto& r : kDisk) {
    EXPECT_LT(std::abs(eval_F(r.z).value - r.F), 1e-13) << r.z;
    EXPECT_LT(std::abs(eval_G(r.z).value - r.G), 1e-12 * std::max(1.0, std::abs(r.G))) << r.z;
  }
}

TEST(F, OutsideDiskIsDomainError) {
  EXPECT_THROW(eval_F({1.01, 0.0}), DomainError);
  EXPECT_THROW(eval_G({0.0, 1.5}), DomainError);
}

TEST(F, UnreachableAccuracyCarriesBestEstimate) {
  try {
    eval_F({0.5, 0.0}, SeriesAccuracy{1e-14, 5});
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_NEAR(e.best_estimate().real(), 0.5 + 0.25 / std::sqrt(8.0) + 0.125 / std::sqrt(27.0) + 0.0625 / 8.0 +
                                              0.03125 / std::pow(5.0, 1.5),
                1e-15);
  }
}

TEST(F, AccuracyContractValidated) {
  EXPECT_THROW(eval_F(0.5, SeriesAccuracy{1e-16, 100}), std::invalid_argument);
  EXPECT_THROW(eval_F(0.5, SeriesAccuracy{1e-10, 0}), std::invalid_argument);
}

TEST(SmallF, CircleReferenceValues) {
  for (const auto& r : kCircle) {
    const auto v = eval_f(r.phi);
    EXPECT_LT(std::abs(v.value - r.f), 1e-13) << r.phi;
    EXPECT_LT(v.error, 1e-13);
  }
}

TEST(SmallF, AtZeroIsZeta) { EXPECT_NEAR(eval_f(0.0).value.real(), 2.6123753486854883433, 1e-13); }

TEST(SmallF, ImaginaryPartVanishesAtPi) {
  EXPECT_LT(std::abs(eval_f(kPi).value.imag()), 1e-14);
  EXPECT_LT(std::abs(eval_f(-kPi).value.imag()), 1e-14);
}

TEST(SmallF, SignFlipThroughPi) {
  EXPECT_GT(eval_f(kPi - 0.05).value.imag(), 0.0);
  EXPECT_LT(eval_f(kPi + 0.05).value.imag(), 0.0);
}

TEST(SmallF, ConjugateSymmetryProperty) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double phi = angle(rng);
    EXPECT_LT(std::abs(eval_f(-phi).value - std::conj(eval_f(phi).value)), 2e-13) << phi;
  }
}

TEST(SmallF, PeriodicInPhi) {
  for (double phi : {0.4, 2.2, -1.7}) EXPECT_LT(std::abs(eval_f(phi + 2 * kPi).value - eval_f(phi).value), 1e-13);
}

TEST(SmallF, MatchesFOnCircle) {
  for (double phi : {0.2, 1.9, -3.0}) {
    EXPECT_LT(std::abs(eval_f(phi).value - eval_F(std::polar(1.0, phi)).value), 1e-13);
  }
}

TEST(SmallG, CircleReferenceValues) {
  for (const auto& r : kCircle) {
    EXPECT_LT(std::abs(eval_g(r.phi).value - r.g), 1e-12 * std::max(1.0, std::abs(r.g))) << r.phi;
  }
}

TEST(SmallG, AtPiMatchesAbelOracle) {
  const Complex abel = oracle::abel_sum([](long n) { return std::sqrt(static_cast<double>(n)); }, kPi);
  EXPECT_NEAR(abel.real(), -0.38010481260968401678, 1e-8);
  EXPECT_LT(std::abs(eval_g(kPi).value - abel), 1e-8);
  EXPECT_LT(std::abs(eval_g(kPi).value.imag()), 1e-13);
}

TEST(SmallG, ConjugateSymmetry) {
  EXPECT_LT(std::abs(eval_g(-2.0).value - std::conj(eval_g(2.0).value)), 1e-13);
}

TEST(SmallG, SingularityGuard) {
  EXPECT_THROW(eval_g(0.0), SingularityError);
  EXPECT_THROW(eval_g(5e-4), SingularityError);
  EXPECT_THROW(eval_g(2 * kPi - 1e-4), SingularityError);
  EXPECT_NO_THROW(eval_g(2e-3));
  EXPECT_THROW(eval_G(1.0), SingularityError);
}

TEST(SmallG, SeriesAndFiniteDifferenceAgree) {
  for (double phi : {0.1, -0.1, 0.5, 1.0, 2.0, kPi, -2.9}) {
    const auto check = cross_check_g(phi);
    EXPECT_TRUE(check.agree()) << phi << " diff " << check.difference << " tol " << check.tolerance;
  }
}

TEST(SmallG, FiniteDifferenceStencilMustAvoidOrigin) {
  EXPECT_THROW(g_finite_difference(1.5e-3), SingularityError);
  EXPECT_THROW(g_finite_difference(1.0, 0.0), std::invalid_argument);
}

TEST(SmallG, FiniteNKernelConvergesTowardG) {
  // (1/N) G_{N-1}(e^{i phi}) -> (1/2 pi) g(phi): the drift shrinks as N doubles.
  auto kernel = [](std::size_t n) { return eval_GN(n - 1, std::polar(1.0, kPi)) / static_cast<double>(n); };
  auto drift = [&](std::size_t n) { return std::abs(kernel(2 * n) - kernel(n)); };
  EXPECT_LT(drift(2048), drift(512));
}

TEST(Reality, ConjugationCommutesWithG) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> radius(0.0, 0.999), angle(-kPi, kPi);
  for (int i = 0; i < 500; ++i) {
    const Complex z = std::polar(radius(rng), angle(rng));
    EXPECT_LE(std::abs(std::conj(eval_G(z).value) - eval_G(std::conj(z)).value), 1e-12) << z;
  }
}

TEST(DerivativeChain, ZDzSquaredOfTruncatedFIsTruncatedG) {
  // (z d/dz)^2 sum_{n<=N} z^n/n^{3/2} = sum_{n<=N} n^{1/2} z^n term by term.
  const std::size_t n = 200;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex z = std::polar(0.9, angle(rng));
    Complex chained = 0.0, zn = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
      zn *= z;
      const double kd = static_cast<double>(k);
      chained += kd * kd * (zn / (kd * std::sqrt(kd)));
    }
    EXPECT_LE(std::abs(chained - eval_GN(n, z)), 1e-12);
  }
}

TEST(Abel, BoundaryValuesMatchSeries) {
  for (double phi : {0.4, 2.0, -1.3, 3.0}) {
    const auto inside = abel_boundary_value(0.5, phi, Sheet::First);
    EXPECT_LT(std::abs(inside.value - eval_g(phi).value), 1e-6) << phi;
    const auto f_inside = abel_boundary_value(-1.5, phi, Sheet::First);
    EXPECT_LT(std::abs(f_inside.value - eval_f(phi).value), 1e-6) << phi;
  }
}

TEST(Abel, GuardNearBranchPoint) {
  EXPECT_THROW(abel_boundary_value(0.5, 0.0, Sheet::First), SingularityError);
}
