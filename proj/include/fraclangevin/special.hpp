#pragma once

#include <vector>

namespace fraclangevin {

/// ln Gamma(x) for x > 0 via the Lanczos approximation (g = 7, 9 terms),
/// with the reflection formula below x = 0.5. Relative error ~1e-15.
double log_gamma(double x);

/// Euler Beta B(a, b) = exp(lnG(a) + lnG(b) - lnG(a + b)); a, b > 0.
double beta_fn(double a, double b);

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes by Newton iteration on P_n; n >= 1.
GaussLegendre gauss_legendre(int n);

}  // namespace fraclangevin
