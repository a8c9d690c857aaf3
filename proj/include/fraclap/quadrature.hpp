#pragma once

#include <functional>
#include <vector>

namespace fraclap::quad {

inline constexpr int kDefaultFineN = 200000;

/// Gaussian-type rule for integrals  int_0^1 f(r) (1 - r^2)^{alpha/2} dr.
struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing, in (0, 1)
  std::vector<double> weights;  // positive
  double alpha = 0.0;
  int fine_n = 0;

  int size() const { return static_cast<int>(nodes.size()); }
};

/// Builds a k-node rule for weight (1 - r^2)^{alpha/2} on [0, 1].
///
/// The construction follows the Lanczos route: a fine discretization of the
/// measure (nodes x_i, masses w_i), then K steps of Lanczos on diag(x) with
/// starting vector (sqrt(w_i)), with full reorthogonalization, and the
/// eigendecomposition of the resulting tridiagonal matrix. Nodes are the
/// eigenvalues; weight_i = ||b||^2 (first eigenvector component)^2. The
/// rule reproduces the fine rule exactly for polynomials of degree 2k-1
/// or less.
///
/// Requires alpha in (0, 2), 1 <= k << fine_n. Throws std::runtime_error on
/// Lanczos breakdown before k steps, reporting the achievable size.
QuadratureRule build_radial_rule(double alpha, int k,
                                 int fine_n = kDefaultFineN);

/// Same construction for the general weight (1 - r^2)^{beta}, beta > -1.
/// build_radial_rule(alpha, ...) is this with beta = alpha / 2.
QuadratureRule build_radial_rule_exponent(double beta, int k, int fine_n);

/// Sum f(node_i) * weight_i.
double integrate_radial(const QuadratureRule& rule,
                        const std::function<double(double)>& f);

enum class AngularKind { TrapezoidPeriodic, GaussLegendreMu };

/// Angular rule: either the periodic trapezoid rule on [0, 2pi) (exact for
/// trigonometric polynomials of degree < m) or Gauss-Legendre in
/// mu = cos(theta) on (-1, 1) (exact for polynomial degree <= 2m-1).
struct AngularRule {
  AngularKind kind = AngularKind::TrapezoidPeriodic;
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

AngularRule build_angular_rule(AngularKind kind, int m);

/// Gauss-Legendre nodes/weights on [0, 1] (convenience mapping of the
/// mu rule; exact for polynomial degree <= 2m-1).
AngularRule gauss_legendre_01(int m);

}  // namespace fraclap::quad
