#include "fraclap/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fraclap/linalg.hpp"

namespace fraclap::quad {

namespace {

// Fine discretization of int_0^1 f(r) (1-r^2)^beta dr. Substituting
// r = sin(phi) gives int_0^{pi/2} f(sin phi) (cos phi)^{2 beta + 1} dphi
// with a smooth integrand up to the (cos phi)^{2 beta + 1} endpoint factor,
// which composite two-point Gauss cells resolve to ~1e-13 at the default
// size. A raw midpoint rule in r leaves an O(fine_n^{-1-beta}) endpoint
// error that the compressed rule inherits, which is far too coarse for the
// exactness tests.
void fine_discretization(double beta, int fine_n, std::vector<double>& x,
                         std::vector<double>& w) {
  const int cells = fine_n / 2;
  const double h = (M_PI / 2.0) / cells;
  // Two-point Gauss offsets within a cell of width h.
  const double off = 0.5 / std::sqrt(3.0);
  x.resize(2 * cells);
  w.resize(2 * cells);
  const double expo = 2.0 * beta + 1.0;
  for (int j = 0; j < cells; ++j) {
    const double phi0 = (j + 0.5 - off) * h;
    const double phi1 = (j + 0.5 + off) * h;
    x[2 * j] = std::sin(phi0);
    x[2 * j + 1] = std::sin(phi1);
    w[2 * j] = 0.5 * h * std::pow(std::cos(phi0), expo);
    w[2 * j + 1] = 0.5 * h * std::pow(std::cos(phi1), expo);
  }
}

}  // namespace

QuadratureRule build_radial_rule_exponent(double beta, int k, int fine_n) {
  if (!(beta > -1.0)) {
    throw std::invalid_argument("build_radial_rule: weight exponent must be > -1");
  }
  if (k < 1) throw std::invalid_argument("build_radial_rule: k must be >= 1");
  if (fine_n < 16 * k) {
    throw std::invalid_argument("build_radial_rule: need k << fine_n");
  }

  std::vector<double> x, w;
  fine_discretization(beta, fine_n, x, w);
  const std::size_t n = x.size();

  // b = sqrt(w); the Lanczos start vector.
  std::vector<double> b(n);
  double mass = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = std::sqrt(w[i]);
    mass += w[i];
  }
  const double bnorm = std::sqrt(mass);

  // Lanczos on A = diag(x) with start b, full reorthogonalization.
  std::vector<double> alpha_coef(k), beta_coef(k > 1 ? k - 1 : 0);
  std::vector<std::vector<double>> q;
  q.reserve(k);
  q.emplace_back(n);
  for (std::size_t i = 0; i < n; ++i) q[0][i] = b[i] / bnorm;

  std::vector<double> v(n);
  for (int j = 0; j < k; ++j) {
    const std::vector<double>& qj = q[j];
    for (std::size_t i = 0; i < n; ++i) v[i] = x[i] * qj[i];
    double aj = 0.0;
    for (std::size_t i = 0; i < n; ++i) aj += qj[i] * v[i];
    alpha_coef[j] = aj;
    if (j == k - 1) break;
    for (std::size_t i = 0; i < n; ++i) v[i] -= aj * qj[i];
    if (j > 0) {
      const std::vector<double>& qm = q[j - 1];
      for (std::size_t i = 0; i < n; ++i) v[i] -= beta_coef[j - 1] * qm[i];
    }
    // Full reorthogonalization against all previous Lanczos vectors.
    for (int p = 0; p <= j; ++p) {
      const std::vector<double>& qp = q[p];
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += qp[i] * v[i];
      for (std::size_t i = 0; i < n; ++i) v[i] -= dot * qp[i];
    }
    double bj = 0.0;
    for (std::size_t i = 0; i < n; ++i) bj += v[i] * v[i];
    bj = std::sqrt(bj);
    if (bj < 1e-14) {
      throw std::runtime_error(
          "build_radial_rule: Lanczos breakdown, achievable rule size is " +
          std::to_string(j + 1) + " of requested " + std::to_string(k));
    }
    beta_coef[j] = bj;
    q.emplace_back(n);
    for (std::size_t i = 0; i < n; ++i) q[j + 1][i] = v[i] / bj;
  }

  linalg::SymTridiag t;
  t.diag = alpha_coef;
  t.offdiag = beta_coef;
  const linalg::EigenDecomp eig = linalg::tridiag_eig(t);

  QuadratureRule rule;
  rule.alpha = 2.0 * beta;
  rule.fine_n = fine_n;
  rule.nodes = eig.values;
  rule.weights.resize(k);
  for (int j = 0; j < k; ++j) {
    const double first = eig.vec(0, j);
    rule.weights[j] = mass * first * first;
  }
  return rule;
}

QuadratureRule build_radial_rule(double alpha, int k, int fine_n) {
  if (!(alpha > 0.0) || !(alpha < 2.0)) {
    throw std::invalid_argument("build_radial_rule: alpha must lie in (0, 2)");
  }
  QuadratureRule rule = build_radial_rule_exponent(alpha / 2.0, k, fine_n);
  rule.alpha = alpha;
  return rule;
}

double integrate_radial(const QuadratureRule& rule,
                        const std::function<double(double)>& f) {
  double acc = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    acc += f(rule.nodes[i]) * rule.weights[i];
  }
  return acc;
}

AngularRule build_angular_rule(AngularKind kind, int m) {
  if (m < 1) throw std::invalid_argument("build_angular_rule: m must be >= 1");
  AngularRule rule;
  rule.kind = kind;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  if (kind == AngularKind::TrapezoidPeriodic) {
    const double step = 2.0 * M_PI / m;
    for (int i = 0; i < m; ++i) {
      rule.nodes[i] = i * step;
      rule.weights[i] = step;
    }
    return rule;
  }
  // Gauss-Legendre in mu: Golub-Welsch on the Legendre Jacobi matrix.
  linalg::SymTridiag t;
  t.diag.assign(m, 0.0);
  t.offdiag.resize(m - 1);
  for (int j = 1; j < m; ++j) {
    t.offdiag[j - 1] = j / std::sqrt(4.0 * j * j - 1.0);
  }
  const linalg::EigenDecomp eig = linalg::tridiag_eig(t);
  for (int j = 0; j < m; ++j) {
    rule.nodes[j] = eig.values[j];
    const double first = eig.vec(0, j);
    rule.weights[j] = 2.0 * first * first;
  }
  return rule;
}

AngularRule gauss_legendre_01(int m) {
  AngularRule rule = build_angular_rule(AngularKind::GaussLegendreMu, m);
  for (int j = 0; j < m; ++j) {
    rule.nodes[j] = 0.5 * (rule.nodes[j] + 1.0);
    rule.weights[j] *= 0.5;
  }
  return rule;
}

}  // namespace fraclap::quad
