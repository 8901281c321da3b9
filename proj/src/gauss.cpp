#include "embeam/gauss.hpp"

#include <cmath>

#include "embeam/errors.hpp"

namespace embeam {

GaussRule1D gauss_legendre(int n) {
  if (n < 1) throw UsageError("gauss_legendre: need at least one point");
  GaussRule1D rule;
  rule.points.resize(n);
  rule.weights.resize(n);

  const int m = (n + 1) / 2;  // roots come in +/- pairs
  for (int i = 0; i < m; ++i) {
    // Chebyshev-based initial guess for the i-th root of P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Evaluate P_n(x) and P_n'(x) via the three-term recurrence.
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.points[i] = -x;
    rule.points[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.points[n / 2] = 0.0;  // exact center for odd rules
  return rule;
}

GaussRule1D gauss_legendre_01(int n) {
  GaussRule1D rule = gauss_legendre(n);
  for (int i = 0; i < n; ++i) {
    rule.points[i] = 0.5 * (rule.points[i] + 1.0);
    rule.weights[i] *= 0.5;
  }
  return rule;
}

std::vector<GaussPoint3D> hex_gauss_rule(int n_per_axis) {
  const GaussRule1D g = gauss_legendre(n_per_axis);
  std::vector<GaussPoint3D> rule;
  rule.reserve(static_cast<std::size_t>(n_per_axis) * n_per_axis * n_per_axis);
  for (int k = 0; k < n_per_axis; ++k)
    for (int j = 0; j < n_per_axis; ++j)
      for (int i = 0; i < n_per_axis; ++i)
        rule.push_back({Vec3(g.points[i], g.points[j], g.points[k]),
                        g.weights[i] * g.weights[j] * g.weights[k]});
  return rule;
}

}  // namespace embeam
