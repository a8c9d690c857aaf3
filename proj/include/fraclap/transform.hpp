#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fraclap/basis.hpp"
#include "fraclap/quadrature.hpp"

namespace fraclap::transform {

using basis::BasisIndex;
using basis::ProblemParams;
using basis::Vec3;

using PointFn = std::function<double(const Vec3&)>;
using RadialFn = std::function<double(double)>;

/// Which expansion the stored coefficients belong to: U-side coefficients
/// multiply the weighted functions p_{l,m,n} (solution representation),
/// F-side coefficients multiply d_{n,l} P_{l,m,n} (right-hand side).
/// Conversion between the two is diagonal multiplication by eigenvalues
/// and happens only in to_f_side / to_u_side.
enum class FieldKind { USide, FSide };

/// Truncated coefficient field over (l, channel, n), densely stored.
/// 2D channels: 0 = cos, 1 = sin (l = 0 has only the cos channel).
/// 3D channels: c = m + l for m in [-l, l], real harmonics.
struct CoefficientField {
  ProblemParams params;
  int n_max = 0;
  int l_max = 0;
  FieldKind kind = FieldKind::USide;
  std::vector<double> coeffs;

  static CoefficientField zeros(const ProblemParams& p, int n_max, int l_max,
                                FieldKind kind);

  int channels(int l) const { return basis::multiplicity(params.dim, l); }
  std::size_t offset(int l, int channel) const;
  double& at(int l, int channel, int n) {
    return coeffs[offset(l, channel) + static_cast<std::size_t>(n)];
  }
  double at(int l, int channel, int n) const {
    return coeffs[offset(l, channel) + static_cast<std::size_t>(n)];
  }
};

/// Structured evaluation point set. 2D: (r_i, theta_j) polar tensor grid,
/// values laid out r-major. 3D: (r_i, theta_t, phi_j) with theta the
/// colatitude, laid out ((i * n_theta + t) * n_phi + j).
struct EvalGrid {
  int dim = 2;
  std::vector<double> r;
  std::vector<double> theta;
  std::vector<double> phi;

  std::size_t size() const {
    return r.size() * theta.size() * (dim == 3 ? phi.size() : 1);
  }

  static EvalGrid ball_2d(int n_r = 1000, int n_theta = 32, double r_min = 0.0,
                          double r_max = 1.0);
  static EvalGrid ball_3d(int n_r = 1000, int n_theta = 16, int n_phi = 16,
                          double r_min = 0.0, double r_max = 1.0);
};

struct TransformOptions {
  int fine_n = quad::kDefaultFineN;

  /// Radial rule size; 0 selects 2 n_max + l_max + 4, which is exact for
  /// data whose u / w has radial degree up to 2 n_max. Callers projecting
  /// data of higher degree (deliberately under-truncated runs) must size
  /// the rule for the data instead.
  int k_radial = 0;

  /// Quadrature route for the u-side numerators (which carry no explicit
  /// weight factor): WeightCarrying divides samples by w(r) and applies the
  /// weighted rule -- exact whenever u / w is a polynomial (the usual
  /// situation for solutions). PlainGaussLegendre integrates u directly
  /// with an unweighted rule -- exact whenever u itself is a polynomial,
  /// as in the coefficient-decay experiment where u / w is not.
  enum class UNumerator { WeightCarrying, PlainGaussLegendre };
  UNumerator u_numerator = UNumerator::WeightCarrying;
};

/// Projects u onto span{p_{l,m,n}}, n <= N, l <= L. The result is U-side:
/// synth_u reproduces the projection of u. Exact (to quadrature accuracy)
/// when u / w is a polynomial of compatible degree.
CoefficientField analyze_u(const ProblemParams& p, const PointFn& u, int n_max,
                           int l_max, const TransformOptions& opt = {});

/// Projects a right-hand side f and divides by the eigenvalues, so the
/// result is U-side ready: synth_u of it is the fractional Poisson solution
/// for data f, and synth_f of it reproduces the projection of f.
CoefficientField analyze_f(const ProblemParams& p, const PointFn& f, int n_max,
                           int l_max, const TransformOptions& opt = {});

/// Radial (l = 0 only) fast paths; valid when the data are rotationally
/// symmetric.
CoefficientField analyze_u_radial(const ProblemParams& p, const RadialFn& u,
                                  int n_max, const TransformOptions& opt = {});
CoefficientField analyze_f_radial(const ProblemParams& p, const RadialFn& f,
                                  int n_max, const TransformOptions& opt = {});

/// Pointwise synthesis of u = sum c p_{l,m,n}; exactly zero at r >= 1.
/// Requires a U-side field.
std::vector<double> synth_u(const CoefficientField& c, const EvalGrid& grid);

/// Pointwise synthesis of (-Delta)^{alpha/2} u = sum c d_{n,l} P_{l,m,n};
/// this is the forward fractional Laplacian of the represented u.
/// Requires a U-side field.
std::vector<double> synth_f(const CoefficientField& c, const EvalGrid& grid);

/// Radial-profile synthesis from the l = 0 modes.
std::vector<double> synth_u_radial(const CoefficientField& c,
                                   const std::vector<double>& r);
std::vector<double> synth_f_radial(const CoefficientField& c,
                                   const std::vector<double>& r);

/// Diagonal eigenvalue multiplication / division with kind bookkeeping.
CoefficientField to_f_side(const CoefficientField& c);
CoefficientField to_u_side(const CoefficientField& c);

/// max |a_i - b_i|; throws on shape mismatch.
double sup_error(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace fraclap::transform
