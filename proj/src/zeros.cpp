#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "circdual/auxfun.hpp"

namespace circdual {
namespace {

// Parlett-Reinsch balancing with power-of-two scalings.
void balance(Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  constexpr double radix = 2.0;
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(m(j, i));
        r += std::abs(m(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        converged = false;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
  }
}

// Derivative of G_N at z, by Horner.
Complex eval_GN_derivative(std::size_t degree, Complex z) {
  Complex acc = 0.0;
  for (std::size_t n = degree; n >= 1; --n)
    acc = acc * z + static_cast<double>(n) * std::sqrt(static_cast<double>(n));
  return acc;
}

}  // namespace

std::size_t ZeroSet::count_near_unit_circle(double band) const {
  return static_cast<std::size_t>(std::count_if(roots.begin(), roots.end(), [band](Complex z) {
    return std::abs(std::abs(z) - 1.0) < band;
  }));
}

double ZeroSet::fraction_near_unit_circle(double band) const {
  if (roots.empty()) return 0.0;
  return static_cast<double>(count_near_unit_circle(band)) / static_cast<double>(roots.size());
}

ZeroSet find_zeros(std::size_t degree) {
  if (degree < 1 || degree > 512)
    throw std::invalid_argument("find_zeros: degree must be in [1, 512], got " +
                                std::to_string(degree));
  ZeroSet out;
  out.degree = degree;
  for (std::size_t n = 1; n <= degree; ++n) out.coefficient_sum += std::sqrt(static_cast<double>(n));

  // G_N(z) = z * P(z), P(z) = sum_{k=0}^{N-1} sqrt(k+1) z^k.
  out.roots.push_back(0.0);
  const auto m = static_cast<Eigen::Index>(degree - 1);
  if (m > 0) {
    const double lead = std::sqrt(static_cast<double>(degree));
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
    for (Eigen::Index k = 0; k < m; ++k)
      companion(0, m - 1 - k) = -std::sqrt(static_cast<double>(k + 1)) / lead;
    balance(companion);

    Eigen::EigenSolver<Eigen::MatrixXd> solver;
    solver.setMaxIterations(60 * static_cast<Eigen::Index>(m));
    solver.compute(companion, false);
    if (solver.info() != Eigen::Success)
      throw RootFinderError("find_zeros: companion eigenvalue iteration failed for N = " +
                                std::to_string(degree),
                            static_cast<int>(solver.getMaxIterations()));
    for (Eigen::Index i = 0; i < m; ++i) {
      Complex z = solver.eigenvalues()(i);
      // One Newton step on G_N.
      const Complex d = eval_GN_derivative(degree, z);
      if (std::abs(d) > 0.0) {
        const Complex polished = z - eval_GN(degree, z) / d;
        if (std::abs(eval_GN(degree, polished)) <= std::abs(eval_GN(degree, z))) z = polished;
      }
      out.roots.push_back(z);
    }
  }

  std::sort(out.roots.begin(), out.roots.end(),
            [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
  for (const auto& z : out.roots) out.residual = std::max(out.residual, std::abs(eval_GN(degree, z)));
  return out;
}

}  // namespace circdual
