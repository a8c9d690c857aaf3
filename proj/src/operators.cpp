#include "fraclap/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "fraclap/special.hpp"

namespace fraclap::ops {

using special::log_gamma;

AnalyticPair analytic_pair(int id, const ProblemParams& p) {
  p.validate();
  if (id < 1 || id > 4) {
    throw std::invalid_argument("analytic_pair: id must be in 1..4");
  }
  const double alpha = p.alpha;
  const int d = p.dim;
  const double a2 = alpha / 2.0;

  AnalyticPair pair;
  pair.id = id;
  pair.params = p;
  const bool shifted = (id == 2 || id == 4);  // exponent alpha/2 + 1
  const bool with_xd = (id == 3 || id == 4);
  pair.min_l = with_xd ? 1 : 0;
  pair.min_n = shifted ? 1 : 0;

  auto r2_of = [d](const Vec3& x) {
    return d == 2 ? x.x * x.x + x.y * x.y : x.x * x.x + x.y * x.y + x.z * x.z;
  };
  auto xd_of = [d](const Vec3& x) { return d == 2 ? x.y : x.z; };

  const double expo = shifted ? a2 + 1.0 : a2;
  pair.u = [=](const Vec3& x) {
    const double r2 = r2_of(x);
    if (r2 >= 1.0) return 0.0;
    const double base = std::pow(1.0 - r2, expo);
    return with_xd ? base * xd_of(x) : base;
  };

  // Gamma-factor constants of the closed-form right-hand sides.
  const double g_top = shifted ? log_gamma(a2 + 2.0) : log_gamma(a2 + 1.0);
  const double g_mid =
      with_xd ? log_gamma((d + alpha) / 2.0 + 1.0) : log_gamma((d + alpha) / 2.0);
  const double g_bot = with_xd ? log_gamma(d / 2.0 + 1.0) : log_gamma(d / 2.0);
  const double c0 = std::pow(2.0, alpha) * std::exp(g_top + g_mid - g_bot);
  const double slope =
      shifted ? 1.0 + alpha / (with_xd ? d + 2.0 : static_cast<double>(d)) : 0.0;

  pair.f = [=](const Vec3& x) {
    const double r2 = r2_of(x);
    const double base = c0 * (shifted ? 1.0 - slope * r2 : 1.0);
    return with_xd ? base * xd_of(x) : base;
  };
  return pair;
}

std::vector<double> apply_fractional_laplacian(const ProblemParams& p,
                                               const PointFn& u, int n_max,
                                               int l_max, const EvalGrid& grid,
                                               const TransformOptions& opt) {
  const transform::CoefficientField c =
      transform::analyze_u(p, u, n_max, l_max, opt);
  return transform::synth_f(c, grid);
}

std::vector<double> solve_poisson(const ProblemParams& p, const PointFn& f,
                                  int n_max, int l_max, const EvalGrid& grid,
                                  const TransformOptions& opt) {
  const transform::CoefficientField c =
      transform::analyze_f(p, f, n_max, l_max, opt);
  return transform::synth_u(c, grid);
}

}  // namespace fraclap::ops
