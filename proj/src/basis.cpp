#include "fraclap/basis.hpp"

#include <cmath>
#include <stdexcept>

#include "fraclap/quadrature.hpp"

namespace fraclap::basis {

using special::JacobiParams;
using special::log_gamma;
using special::pochhammer;

void ProblemParams::validate() const {
  if (!(alpha > 0.0) || !(alpha < 2.0)) {
    throw std::invalid_argument("ProblemParams: alpha must lie strictly in (0, 2)");
  }
  if (dim != 2 && dim != 3) {
    throw std::invalid_argument("ProblemParams: dim must be 2 or 3");
  }
}

int multiplicity(int dim, int l) {
  if (l < 0) throw std::invalid_argument("multiplicity: l must be >= 0");
  if (dim == 2) return l == 0 ? 1 : 2;
  if (dim == 3) return 2 * l + 1;
  throw std::invalid_argument("multiplicity: dim must be 2 or 3");
}

double eigenvalue(const ProblemParams& p, int n, int l) {
  p.validate();
  if (n < 0 || l < 0) throw std::invalid_argument("eigenvalue: n, l must be >= 0");
  const double delta = p.dim + 2.0 * l;
  const double log_val = p.alpha * std::log(2.0) +
                         log_gamma(1.0 + p.alpha / 2.0 + n) +
                         log_gamma((delta + p.alpha) / 2.0 + n) -
                         log_gamma(n + 1.0) - log_gamma(delta / 2.0 + n);
  return std::exp(log_val);
}

namespace {

void check_index(const ProblemParams& p, const BasisIndex& idx) {
  if (idx.l < 0 || idx.n < 0) {
    throw std::out_of_range("basis index: l, n must be >= 0");
  }
  if (p.dim == 2) {
    if (idx.m != 0 && idx.m != 1) {
      throw std::out_of_range("basis index: 2D channel must be 0 (cos) or 1 (sin)");
    }
    if (idx.l == 0 && idx.m == 1) {
      throw std::out_of_range("basis index: 2D l = 0 has only the cos channel");
    }
  } else {
    if (std::abs(idx.m) > idx.l) {
      throw std::out_of_range("basis index: need |m| <= l in 3D");
    }
  }
}

}  // namespace

double basis_eval_P(const ProblemParams& p, const BasisIndex& idx,
                    const Vec3& x) {
  p.validate();
  check_index(p, idx);
  const double r2 = p.dim == 2 ? x.x * x.x + x.y * x.y
                               : x.x * x.x + x.y * x.y + x.z * x.z;
  const JacobiParams jp{p.alpha / 2.0, p.dim / 2.0 + idx.l - 1.0, idx.n};
  const double radial = special::jacobi_eval(jp, 2.0 * r2 - 1.0);
  const double harmonic = special::solid_harm(p.dim, {idx.l, idx.m}, x);
  return harmonic * radial;
}

double basis_eval_p(const ProblemParams& p, const BasisIndex& idx,
                    const Vec3& x) {
  const double r2 = p.dim == 2 ? x.x * x.x + x.y * x.y
                               : x.x * x.x + x.y * x.y + x.z * x.z;
  if (r2 >= 1.0) {
    p.validate();
    check_index(p, idx);
    return 0.0;
  }
  return std::pow(1.0 - r2, p.alpha / 2.0) * basis_eval_P(p, idx, x);
}

double norm_squared(const ProblemParams& p, int l, int n) {
  p.validate();
  if (n < 0 || l < 0) throw std::invalid_argument("norm_squared: n, l must be >= 0");
  const int k = 2 * n + l + 3;
  const quad::QuadratureRule rule = quad::build_radial_rule(p.alpha, k);
  const double a = p.alpha / 2.0;
  const double b = p.dim / 2.0 + l - 1.0;
  const int rpow = 2 * l + p.dim - 1;
  double radial = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    const double r = rule.nodes[i];
    const double pj = special::jacobi_eval({a, b, n}, 2.0 * r * r - 1.0);
    radial += pj * pj * std::pow(r, rpow) * rule.weights[i];
  }
  if (p.dim == 2) {
    const double angular = (l == 0 ? 2.0 : 1.0) * M_PI;
    return angular * radial;
  }
  return radial;  // real Y_{l,m} are orthonormal on the sphere
}

double h_squared(const ProblemParams& p, int l, int n) {
  p.validate();
  if (n < 0 || l < 0) throw std::invalid_argument("h_squared: n, l must be >= 0");
  const double a2 = p.alpha / 2.0;
  const double d2 = p.dim / 2.0;
  const double num = pochhammer(a2 + 1.0, n) * pochhammer(d2, l + n) *
                     (l + n + a2 + d2);
  const double den = std::exp(log_gamma(n + 1.0)) *
                     pochhammer(a2 + d2 + 1.0, l + n) *
                     (l + 2.0 * n + a2 + d2);
  return num / den;
}

double norm_squared_analytic(const ProblemParams& p, int l, int n) {
  const double a2 = p.alpha / 2.0;
  const double weight_mass =
      std::pow(M_PI, p.dim / 2.0) *
      std::exp(log_gamma(a2 + 1.0) - log_gamma(a2 + p.dim / 2.0 + 1.0));
  const double h2 = h_squared(p, l, n);
  if (p.dim == 2) {
    // Our channels carry int cos^2(l t) dt = (1 + delta_{l0}) pi, while the
    // theorem's harmonics are normalized against the averaged measure.
    const double channel = (l == 0 ? 2.0 : 1.0) / 2.0;
    return channel * h2 * weight_mass;
  }
  return h2 * weight_mass / (4.0 * M_PI);
}

double integral_constant(double alpha, int dim) {
  if (!(alpha > 0.0) || !(alpha < 2.0)) {
    throw std::invalid_argument("integral_constant: alpha must lie in (0, 2)");
  }
  if (dim < 1) throw std::invalid_argument("integral_constant: dim must be >= 1");
  // |Gamma(-alpha/2)| = Gamma(1 - alpha/2) / (alpha/2) on (0, 2).
  const double abs_gamma_neg = std::exp(log_gamma(1.0 - alpha / 2.0)) / (alpha / 2.0);
  return std::pow(2.0, alpha) *
         std::exp(log_gamma((dim + alpha) / 2.0)) /
         (std::pow(M_PI, dim / 2.0) * abs_gamma_neg);
}

}  // namespace fraclap::basis
