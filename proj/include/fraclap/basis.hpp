#pragma once

#include "fraclap/special.hpp"

namespace fraclap::basis {

using special::Vec3;

/// Problem setting: fractional index alpha in (0, 2) on the unit ball in
/// dimension 2 or 3.
struct ProblemParams {
  double alpha = 1.0;
  int dim = 2;

  void validate() const;
};

/// Index of one basis function P_{l,m,n}. In 2D, m is the channel
/// (0 = cos, 1 = sin; l = 0 has only channel 0). In 3D, m in [-l, l].
struct BasisIndex {
  int l = 0;
  int m = 0;
  int n = 0;
};

/// Number of independent degree-l harmonics: M_{2,l} = 2 (l >= 1),
/// M_{3,l} = 2l + 1, and M_{d,0} = 1 (the formula is 0/0 at l = 0 in 2D;
/// the constant harmonic resolves it).
int multiplicity(int dim, int l);

/// Eigenvalue d^{alpha,d}_{n,l} of the weighted fractional Laplacian:
///   2^alpha Gamma(1 + alpha/2 + n) Gamma((delta+alpha)/2 + n)
///     / (n! Gamma(delta/2 + n)),  delta = d + 2l,
/// evaluated in log space.
double eigenvalue(const ProblemParams& p, int n, int l);

/// Unweighted basis polynomial P_{l,m,n}(x) =
/// V_{l,m}(x) P_n^{(alpha/2, d/2 + l - 1)}(2|x|^2 - 1).
double basis_eval_P(const ProblemParams& p, const BasisIndex& idx,
                    const Vec3& x);

/// Weighted basis function p_{l,m,n}(x) = (1-|x|^2)_+^{alpha/2} P_{l,m,n}(x);
/// identically zero for |x| >= 1.
double basis_eval_p(const ProblemParams& p, const BasisIndex& idx,
                    const Vec3& x);

/// Channel norm  int_B P_{l,m,n}^2 (1-|x|^2)^{alpha/2} dx  by radial
/// quadrature times the closed-form angular factor. In 2D the value is the
/// same for the cos and sin channels (only l = 0 differs, where the sole
/// channel carries the full 2pi).
double norm_squared(const ProblemParams& p, int l, int n);

/// Analytic [h_{l,n}]^2 of the orthonormal-basis normalization; used as a
/// cross-check of norm_squared via
///   norm_squared = channel_factor * h^2 * pi^{d/2} Gamma(a/2+1) /
///                  Gamma(a/2 + d/2 + 1).
double h_squared(const ProblemParams& p, int l, int n);

/// Closed-form rescaling of h_squared that reproduces norm_squared; the
/// mutual oracle for the quadrature path.
double norm_squared_analytic(const ProblemParams& p, int l, int n);

/// The constant c_{alpha,d} of the singular-integral definition,
/// 2^alpha Gamma((d+alpha)/2) / (pi^{d/2} |Gamma(-alpha/2)|). Documented
/// for completeness; no solver path uses it (the spectral algorithm never
/// forms the principal-value integral).
double integral_constant(double alpha, int dim);

}  // namespace fraclap::basis
