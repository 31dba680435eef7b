#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "circdual/auxfun.hpp"
#include "oracles.hpp"

using namespace circdual;

TEST(Zeros, DegreeOne) {
  const auto zs = find_zeros(1);
  ASSERT_EQ(zs.roots.size(), 1u);
  EXPECT_EQ(zs.roots[0], Complex(0.0));
}

TEST(Zeros, DegreeTwo) {
  const auto zs = find_zeros(2);
  ASSERT_EQ(zs.roots.size(), 2u);
  // Sorted by argument: 0 (arg 0) before -1/sqrt2 (arg pi).
  EXPECT_EQ(zs.roots[0], Complex(0.0));
  EXPECT_NEAR(zs.roots[1].real(), -0.70710678, 1e-8);
  EXPECT_NEAR(zs.roots[1].imag(), 0.0, 1e-14);
}

TEST(Zeros, CountResidualAndOrdering) {
  for (std::size_t n : {3, 16, 64, 256}) {
    const auto zs = find_zeros(n);
    ASSERT_EQ(zs.roots.size(), n);
    EXPECT_LE(zs.residual, 1e-8 * zs.coefficient_sum) << n;
    EXPECT_TRUE(std::is_sorted(zs.roots.begin(), zs.roots.end(),
                               [](Complex a, Complex b) { return std::arg(a) < std::arg(b); }));
    EXPECT_EQ(std::count(zs.roots.begin(), zs.roots.end(), Complex(0.0)), 1);
  }
}

TEST(Zeros, RootsComeInConjugatePairs) {
  const auto zs = find_zeros(40);
  for (const auto& z : zs.roots) {
    const auto nearest = std::min_element(zs.roots.begin(), zs.roots.end(), [&](Complex a, Complex b) {
      return std::abs(a - std::conj(z)) < std::abs(b - std::conj(z));
    });
    EXPECT_LT(std::abs(*nearest - std::conj(z)), 1e-10);
  }
}

TEST(Zeros, MatchDurandKernerOracle) {
  for (std::size_t n : {8, 16, 40}) {
    std::vector<double> coeff;  // G_N(z) / z
    for (std::size_t k = 1; k <= n; ++k) coeff.push_back(std::sqrt(static_cast<double>(k)));
    auto want = oracle::polynomial_roots(coeff);
    want.push_back(0.0);
    const auto zs = find_zeros(n);
    for (const auto& w : want) {
      double best = INFINITY;
      for (const auto& z : zs.roots) best = std::min(best, std::abs(z - w));
      EXPECT_LT(best, 1e-9) << "N=" << n << " root " << w;
    }
  }
}

TEST(Zeros, CrowdTheUnitCircleAsNGrows) {
  EXPECT_GT(find_zeros(64).count_near_unit_circle(0.1), find_zeros(16).count_near_unit_circle(0.1));
  // Increasing positive coefficients keep the nonzero roots in |z| <= 1.
  for (const auto& z : find_zeros(128).roots) EXPECT_LE(std::abs(z), 1.0 + 1e-12);
}

TEST(Zeros, DegreeRange) {
  EXPECT_THROW(find_zeros(0), std::invalid_argument);
  EXPECT_THROW(find_zeros(513), std::invalid_argument);
  EXPECT_NO_THROW(find_zeros(512));
}
