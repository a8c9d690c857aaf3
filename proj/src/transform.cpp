#include "fraclap/transform.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fraclap/special.hpp"

namespace fraclap::transform {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double jacobi_b(const ProblemParams& p, int l) {
  return p.dim / 2.0 + l - 1.0;
}

int theta_rule_size_2d(int l_max) { return std::max(64, 4 * l_max + 4); }

void require_u_side(const CoefficientField& c, const char* who) {
  if (c.kind != FieldKind::USide) {
    throw std::invalid_argument(std::string(who) +
                                ": expected a U-side field, got F-side");
  }
}

void check_sample(double v, double r, double a1, double a2, int dim) {
  if (std::isfinite(v)) return;
  std::string msg = "analyze: non-finite sample at r=" + std::to_string(r);
  msg += dim == 2 ? ", theta=" + std::to_string(a1)
                  : ", theta=" + std::to_string(a1) + ", phi=" + std::to_string(a2);
  throw std::runtime_error(msg);
}

}  // namespace

CoefficientField CoefficientField::zeros(const ProblemParams& p, int n_max,
                                         int l_max, FieldKind kind) {
  p.validate();
  if (n_max < 0 || l_max < 0) {
    throw std::invalid_argument("CoefficientField: n_max, l_max must be >= 0");
  }
  CoefficientField c;
  c.params = p;
  c.n_max = n_max;
  c.l_max = l_max;
  c.kind = kind;
  std::size_t total = 0;
  for (int l = 0; l <= l_max; ++l) {
    total += static_cast<std::size_t>(basis::multiplicity(p.dim, l)) * (n_max + 1);
  }
  c.coeffs.assign(total, 0.0);
  return c;
}

std::size_t CoefficientField::offset(int l, int channel) const {
  if (l < 0 || l > l_max || channel < 0 || channel >= channels(l)) {
    throw std::out_of_range("CoefficientField: invalid (l, channel)");
  }
  std::size_t off = 0;
  for (int k = 0; k < l; ++k) {
    off += static_cast<std::size_t>(channels(k)) * (n_max + 1);
  }
  return off + static_cast<std::size_t>(channel) * (n_max + 1);
}

EvalGrid EvalGrid::ball_2d(int n_r, int n_theta, double r_min, double r_max) {
  if (n_r < 2 || n_theta < 1) {
    throw std::invalid_argument("EvalGrid::ball_2d: need n_r >= 2, n_theta >= 1");
  }
  EvalGrid g;
  g.dim = 2;
  g.r.resize(n_r);
  for (int i = 0; i < n_r; ++i) {
    g.r[i] = r_min + (r_max - r_min) * i / (n_r - 1.0);
  }
  g.theta.resize(n_theta);
  for (int j = 0; j < n_theta; ++j) g.theta[j] = kTwoPi * j / n_theta;
  return g;
}

EvalGrid EvalGrid::ball_3d(int n_r, int n_theta, int n_phi, double r_min,
                           double r_max) {
  if (n_r < 2 || n_theta < 2 || n_phi < 1) {
    throw std::invalid_argument("EvalGrid::ball_3d: grid too small");
  }
  EvalGrid g;
  g.dim = 3;
  g.r.resize(n_r);
  for (int i = 0; i < n_r; ++i) {
    g.r[i] = r_min + (r_max - r_min) * i / (n_r - 1.0);
  }
  g.theta.resize(n_theta);
  for (int t = 0; t < n_theta; ++t) g.theta[t] = M_PI * t / (n_theta - 1.0);
  g.phi.resize(n_phi);
  for (int j = 0; j < n_phi; ++j) g.phi[j] = kTwoPi * j / n_phi;
  return g;
}

namespace {

// Shared 2D analysis. For u-side data the numerator has no weight factor;
// with the WeightCarrying route the samples are divided by w(r) so the
// weighted rule applies. f-side numerators carry the weight explicitly.
CoefficientField analyze_2d(const ProblemParams& p, const PointFn& fn,
                            int n_max, int l_max, bool f_side,
                            const TransformOptions& opt) {
  // Rule sized so both the denominators (degree 4N + 2l + 1) and the
  // numerators for data with u/w of radial degree up to 2N stay within the
  // exactness range 2K - 1.
  const int k_rad = opt.k_radial > 0 ? opt.k_radial : 2 * n_max + l_max + 4;
  const quad::QuadratureRule rule =
      quad::build_radial_rule(p.alpha, k_rad, opt.fine_n);
  const int m_theta = theta_rule_size_2d(l_max);
  const quad::AngularRule theta_rule =
      quad::build_angular_rule(quad::AngularKind::TrapezoidPeriodic, m_theta);

  const bool plain_numerator =
      !f_side && opt.u_numerator == TransformOptions::UNumerator::PlainGaussLegendre;
  // Unweighted numerator rule for polynomial u; sized for degree
  // 2 n_max + l_max plus the synthesis factors with margin.
  const quad::AngularRule gl =
      plain_numerator ? quad::gauss_legendre_01(2 * (n_max + l_max) + 8)
                      : quad::AngularRule{};
  const std::vector<double>& num_nodes = plain_numerator ? gl.nodes : rule.nodes;
  const std::vector<double>& num_weights =
      plain_numerator ? gl.weights : rule.weights;
  const int n_num = static_cast<int>(num_nodes.size());

  // Samples over the numerator point set.
  std::vector<double> samples(static_cast<std::size_t>(n_num) * m_theta);
  for (int i = 0; i < n_num; ++i) {
    const double r = num_nodes[i];
    const double w_div =
        (!f_side && !plain_numerator) ? std::pow(1.0 - r * r, p.alpha / 2.0) : 1.0;
    for (int j = 0; j < m_theta; ++j) {
      const double th = theta_rule.nodes[j];
      const double v = fn({r * std::cos(th), r * std::sin(th), 0.0});
      check_sample(v, r, th, 0.0, 2);
      samples[static_cast<std::size_t>(i) * m_theta + j] = v / w_div;
    }
  }

  CoefficientField out =
      CoefficientField::zeros(p, n_max, l_max, FieldKind::USide);
  const double a = p.alpha / 2.0;
  std::vector<double> pn(n_max + 1);
  std::vector<double> gproj(n_num);
  std::vector<double> numer(n_max + 1), denom(n_max + 1);

  for (int l = 0; l <= l_max; ++l) {
    const double b = jacobi_b(p, l);
    // Denominators: (1 + delta_{l0}) pi int P_n^2 r^{2l+1} w dr.
    std::fill(denom.begin(), denom.end(), 0.0);
    for (int i = 0; i < rule.size(); ++i) {
      const double r = rule.nodes[i];
      special::jacobi_eval_sequence(a, b, n_max, 2.0 * r * r - 1.0, pn.data());
      const double rfac = std::pow(r, 2 * l + 1) * rule.weights[i];
      for (int n = 0; n <= n_max; ++n) denom[n] += pn[n] * pn[n] * rfac;
    }
    const double ang_norm = (l == 0 ? 2.0 : 1.0) * M_PI;

    for (int channel = 0; channel < out.channels(l); ++channel) {
      if (l == 0 && channel == 1) continue;
      // Angular projection of the samples onto cos(l theta) / sin(l theta).
      for (int i = 0; i < n_num; ++i) {
        double acc = 0.0;
        for (int j = 0; j < m_theta; ++j) {
          const double th = theta_rule.nodes[j];
          const double trig =
              channel == 0 ? std::cos(l * th) : std::sin(l * th);
          acc += samples[static_cast<std::size_t>(i) * m_theta + j] * trig *
                 theta_rule.weights[j];
        }
        gproj[i] = acc;
      }
      std::fill(numer.begin(), numer.end(), 0.0);
      for (int i = 0; i < n_num; ++i) {
        const double r = num_nodes[i];
        special::jacobi_eval_sequence(a, b, n_max, 2.0 * r * r - 1.0, pn.data());
        const double common = gproj[i] * std::pow(r, l + 1) * num_weights[i];
        for (int n = 0; n <= n_max; ++n) numer[n] += pn[n] * common;
      }
      for (int n = 0; n <= n_max; ++n) {
        double c = numer[n] / (ang_norm * denom[n]);
        if (f_side) c /= basis::eigenvalue(p, n, l);
        out.at(l, channel, n) = c;
      }
    }
  }
  return out;
}

// Shared 3D analysis with real spherical harmonics.
CoefficientField analyze_3d(const ProblemParams& p, const PointFn& fn,
                            int n_max, int l_max, bool f_side,
                            const TransformOptions& opt) {
  const int k_rad = opt.k_radial > 0 ? opt.k_radial : 2 * n_max + l_max + 4;
  const quad::QuadratureRule rule =
      quad::build_radial_rule(p.alpha, k_rad, opt.fine_n);
  const quad::AngularRule mu_rule =
      quad::build_angular_rule(quad::AngularKind::GaussLegendreMu, l_max + 2);
  const int m_phi = 2 * l_max + 4;
  const quad::AngularRule phi_rule =
      quad::build_angular_rule(quad::AngularKind::TrapezoidPeriodic, m_phi);
  const int n_mu = mu_rule.size();

  const bool plain_numerator =
      !f_side && opt.u_numerator == TransformOptions::UNumerator::PlainGaussLegendre;
  const quad::AngularRule gl =
      plain_numerator ? quad::gauss_legendre_01(2 * (n_max + l_max) + 8)
                      : quad::AngularRule{};
  const std::vector<double>& num_nodes = plain_numerator ? gl.nodes : rule.nodes;
  const std::vector<double>& num_weights =
      plain_numerator ? gl.weights : rule.weights;
  const int n_num = static_cast<int>(num_nodes.size());

  std::vector<double> sin_t(n_mu), cos_t(n_mu);
  for (int t = 0; t < n_mu; ++t) {
    cos_t[t] = mu_rule.nodes[t];
    sin_t[t] = std::sqrt(std::max(0.0, 1.0 - cos_t[t] * cos_t[t]));
  }

  // Samples S[i][t][j] over the numerator nodes x sphere rule.
  const std::size_t ang_count = static_cast<std::size_t>(n_mu) * m_phi;
  std::vector<double> samples(static_cast<std::size_t>(n_num) * ang_count);
  for (int i = 0; i < n_num; ++i) {
    const double r = num_nodes[i];
    const double w_div =
        (!f_side && !plain_numerator) ? std::pow(1.0 - r * r, p.alpha / 2.0) : 1.0;
    for (int t = 0; t < n_mu; ++t) {
      for (int j = 0; j < m_phi; ++j) {
        const double ph = phi_rule.nodes[j];
        const double v = fn({r * sin_t[t] * std::cos(ph),
                             r * sin_t[t] * std::sin(ph), r * cos_t[t]});
        check_sample(v, r, std::acos(cos_t[t]), ph, 3);
        samples[(static_cast<std::size_t>(i) * n_mu + t) * m_phi + j] = v / w_div;
      }
    }
  }

  // Real harmonic table over the sphere rule.
  const int n_lm = (l_max + 1) * (l_max + 1);
  std::vector<double> ylm(static_cast<std::size_t>(n_lm) * ang_count);
  {
    int lm = 0;
    for (int l = 0; l <= l_max; ++l) {
      for (int m = -l; m <= l; ++m, ++lm) {
        for (int t = 0; t < n_mu; ++t) {
          const double th = std::acos(std::clamp(cos_t[t], -1.0, 1.0));
          for (int j = 0; j < m_phi; ++j) {
            ylm[static_cast<std::size_t>(lm) * ang_count + t * m_phi + j] =
                special::sph_harm_real({l, m}, th, phi_rule.nodes[j]);
          }
        }
      }
    }
  }

  CoefficientField out =
      CoefficientField::zeros(p, n_max, l_max, FieldKind::USide);
  const double a = p.alpha / 2.0;
  std::vector<double> pn(n_max + 1);
  std::vector<double> gproj(n_num);
  std::vector<double> numer(n_max + 1), denom(n_max + 1);

  int lm = 0;
  for (int l = 0; l <= l_max; ++l) {
    const double b = jacobi_b(p, l);
    std::fill(denom.begin(), denom.end(), 0.0);
    for (int i = 0; i < rule.size(); ++i) {
      const double r = rule.nodes[i];
      special::jacobi_eval_sequence(a, b, n_max, 2.0 * r * r - 1.0, pn.data());
      const double rfac = std::pow(r, 2 * l + 2) * rule.weights[i];
      for (int n = 0; n <= n_max; ++n) denom[n] += pn[n] * pn[n] * rfac;
    }
    for (int m = -l; m <= l; ++m, ++lm) {
      for (int i = 0; i < n_num; ++i) {
        double acc = 0.0;
        const double* srow = &samples[static_cast<std::size_t>(i) * ang_count];
        const double* yrow = &ylm[static_cast<std::size_t>(lm) * ang_count];
        for (int t = 0; t < n_mu; ++t) {
          double phi_acc = 0.0;
          for (int j = 0; j < m_phi; ++j) {
            phi_acc += srow[t * m_phi + j] * yrow[t * m_phi + j] *
                       phi_rule.weights[j];
          }
          acc += phi_acc * mu_rule.weights[t];
        }
        gproj[i] = acc;
      }
      std::fill(numer.begin(), numer.end(), 0.0);
      for (int i = 0; i < n_num; ++i) {
        const double r = num_nodes[i];
        special::jacobi_eval_sequence(a, b, n_max, 2.0 * r * r - 1.0, pn.data());
        const double common = gproj[i] * std::pow(r, l + 2) * num_weights[i];
        for (int n = 0; n <= n_max; ++n) numer[n] += pn[n] * common;
      }
      const int channel = m + l;
      for (int n = 0; n <= n_max; ++n) {
        double c = numer[n] / denom[n];
        if (f_side) c /= basis::eigenvalue(p, n, l);
        out.at(l, channel, n) = c;
      }
    }
  }
  return out;
}

CoefficientField analyze_dispatch(const ProblemParams& p, const PointFn& fn,
                                  int n_max, int l_max, bool f_side,
                                  const TransformOptions& opt) {
  p.validate();
  if (n_max < 0 || l_max < 0) {
    throw std::invalid_argument("analyze: n_max and l_max must be >= 0");
  }
  return p.dim == 2 ? analyze_2d(p, fn, n_max, l_max, f_side, opt)
                    : analyze_3d(p, fn, n_max, l_max, f_side, opt);
}

}  // namespace

CoefficientField analyze_u(const ProblemParams& p, const PointFn& u, int n_max,
                           int l_max, const TransformOptions& opt) {
  return analyze_dispatch(p, u, n_max, l_max, /*f_side=*/false, opt);
}

CoefficientField analyze_f(const ProblemParams& p, const PointFn& f, int n_max,
                           int l_max, const TransformOptions& opt) {
  return analyze_dispatch(p, f, n_max, l_max, /*f_side=*/true, opt);
}

namespace {

CoefficientField analyze_radial_impl(const ProblemParams& p, const RadialFn& fn,
                                     int n_max, bool f_side,
                                     const TransformOptions& opt) {
  p.validate();
  if (n_max < 0) throw std::invalid_argument("analyze_radial: n_max must be >= 0");
  const int k_rad = opt.k_radial > 0 ? opt.k_radial : 2 * n_max + 4;
  const quad::QuadratureRule rule =
      quad::build_radial_rule(p.alpha, k_rad, opt.fine_n);

  const bool plain_numerator =
      !f_side && opt.u_numerator == TransformOptions::UNumerator::PlainGaussLegendre;
  const quad::AngularRule gl = plain_numerator
                                   ? quad::gauss_legendre_01(2 * n_max + 8)
                                   : quad::AngularRule{};
  const std::vector<double>& num_nodes = plain_numerator ? gl.nodes : rule.nodes;
  const std::vector<double>& num_weights =
      plain_numerator ? gl.weights : rule.weights;
  const int n_num = static_cast<int>(num_nodes.size());

  const double a = p.alpha / 2.0;
  const double b = jacobi_b(p, 0);
  const int rpow = p.dim - 1;  // r in 2D, r^2 in 3D
  std::vector<double> pn(n_max + 1);
  std::vector<double> numer(n_max + 1, 0.0), denom(n_max + 1, 0.0);

  for (int i = 0; i < n_num; ++i) {
    const double r = num_nodes[i];
    double v = fn(r);
    check_sample(v, r, 0.0, 0.0, p.dim);
    if (!f_side && !plain_numerator) v /= std::pow(1.0 - r * r, a);
    special::jacobi_eval_sequence(a, b, n_max, 2.0 * r * r - 1.0, pn.data());
    const double common = v * std::pow(r, rpow) * num_weights[i];
    for (int n = 0; n <= n_max; ++n) numer[n] += pn[n] * common;
  }
  for (int i = 0; i < rule.size(); ++i) {
    const double r = rule.nodes[i];
    special::jacobi_eval_sequence(a, b, n_max, 2.0 * r * r - 1.0, pn.data());
    const double rfac = std::pow(r, rpow) * rule.weights[i];
    for (int n = 0; n <= n_max; ++n) denom[n] += pn[n] * pn[n] * rfac;
  }

  CoefficientField out = CoefficientField::zeros(p, n_max, 0, FieldKind::USide);
  // In 3D the l = 0 basis function carries Y_0^0 = 1/sqrt(4 pi).
  const double harm = p.dim == 2 ? 1.0 : std::sqrt(4.0 * M_PI);
  for (int n = 0; n <= n_max; ++n) {
    double c = harm * numer[n] / denom[n];
    if (f_side) c /= basis::eigenvalue(p, n, 0);
    out.at(0, 0, n) = c;
  }
  return out;
}

}  // namespace

CoefficientField analyze_u_radial(const ProblemParams& p, const RadialFn& u,
                                  int n_max, const TransformOptions& opt) {
  return analyze_radial_impl(p, u, n_max, /*f_side=*/false, opt);
}

CoefficientField analyze_f_radial(const ProblemParams& p, const RadialFn& f,
                                  int n_max, const TransformOptions& opt) {
  return analyze_radial_impl(p, f, n_max, /*f_side=*/true, opt);
}

namespace {

// Eigenvalue table d_{n,l} indexed l * (n_max + 1) + n, precomputed so the
// per-radius synthesis loops stay free of log-gamma evaluations.
std::vector<double> eigenvalue_table(const CoefficientField& c) {
  std::vector<double> eig(static_cast<std::size_t>(c.l_max + 1) * (c.n_max + 1));
  for (int l = 0; l <= c.l_max; ++l) {
    for (int n = 0; n <= c.n_max; ++n) {
      eig[static_cast<std::size_t>(l) * (c.n_max + 1) + n] =
          basis::eigenvalue(c.params, n, l);
    }
  }
  return eig;
}

// Radial mode profiles F_{l,ch}(r) = sum_n c P_n (optionally with the
// eigenvalue factor), for one radius.
void mode_profiles(const CoefficientField& c, double r,
                   const std::vector<double>* eig, std::vector<double>& pn,
                   std::vector<double>& prof) {
  const ProblemParams& p = c.params;
  const double a = p.alpha / 2.0;
  const double z = 2.0 * r * r - 1.0;
  std::size_t idx = 0;
  for (int l = 0; l <= c.l_max; ++l) {
    special::jacobi_eval_sequence(a, jacobi_b(p, l), c.n_max, z, pn.data());
    for (int ch = 0; ch < c.channels(l); ++ch, ++idx) {
      double acc = 0.0;
      for (int n = 0; n <= c.n_max; ++n) {
        const double factor =
            eig ? (*eig)[static_cast<std::size_t>(l) * (c.n_max + 1) + n] : 1.0;
        acc += c.at(l, ch, n) * factor * pn[n];
      }
      prof[idx] = acc * std::pow(r, l);
    }
  }
}

std::vector<double> synth_impl(const CoefficientField& c, const EvalGrid& grid,
                               bool u_side) {
  require_u_side(c, u_side ? "synth_u" : "synth_f");
  if (grid.dim != c.params.dim) {
    throw std::invalid_argument("synth: grid dimension does not match field");
  }
  const ProblemParams& p = c.params;
  std::size_t n_prof = 0;
  for (int l = 0; l <= c.l_max; ++l) n_prof += c.channels(l);
  std::vector<double> pn(c.n_max + 1), prof(n_prof);
  std::vector<double> values(grid.size(), 0.0);
  const std::vector<double> eig =
      u_side ? std::vector<double>{} : eigenvalue_table(c);
  const std::vector<double>* eig_ptr = u_side ? nullptr : &eig;

  if (p.dim == 2) {
    const int n_theta = static_cast<int>(grid.theta.size());
    // trig tables: cos(l theta_j), sin(l theta_j)
    std::vector<double> ctab(static_cast<std::size_t>(c.l_max + 1) * n_theta);
    std::vector<double> stab(ctab.size());
    for (int l = 0; l <= c.l_max; ++l) {
      for (int j = 0; j < n_theta; ++j) {
        ctab[static_cast<std::size_t>(l) * n_theta + j] =
            std::cos(l * grid.theta[j]);
        stab[static_cast<std::size_t>(l) * n_theta + j] =
            std::sin(l * grid.theta[j]);
      }
    }
    for (std::size_t i = 0; i < grid.r.size(); ++i) {
      const double r = grid.r[i];
      const double w =
          u_side ? (r < 1.0 ? std::pow(1.0 - r * r, p.alpha / 2.0) : 0.0) : 1.0;
      if (u_side && r >= 1.0) continue;  // zero extension
      mode_profiles(c, r, eig_ptr, pn, prof);
      for (int j = 0; j < n_theta; ++j) {
        double acc = 0.0;
        std::size_t idx = 0;
        for (int l = 0; l <= c.l_max; ++l) {
          acc += prof[idx++] * ctab[static_cast<std::size_t>(l) * n_theta + j];
          if (l > 0) {
            acc += prof[idx++] * stab[static_cast<std::size_t>(l) * n_theta + j];
          }
        }
        values[i * n_theta + j] = w * acc;
      }
    }
    return values;
  }

  const int n_theta = static_cast<int>(grid.theta.size());
  const int n_phi = static_cast<int>(grid.phi.size());
  const std::size_t ang_count = static_cast<std::size_t>(n_theta) * n_phi;
  const int n_lm = (c.l_max + 1) * (c.l_max + 1);
  std::vector<double> ytab(static_cast<std::size_t>(n_lm) * ang_count);
  {
    int lm = 0;
    for (int l = 0; l <= c.l_max; ++l) {
      for (int m = -l; m <= l; ++m, ++lm) {
        for (int t = 0; t < n_theta; ++t) {
          for (int j = 0; j < n_phi; ++j) {
            ytab[static_cast<std::size_t>(lm) * ang_count + t * n_phi + j] =
                special::sph_harm_real({l, m}, grid.theta[t], grid.phi[j]);
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < grid.r.size(); ++i) {
    const double r = grid.r[i];
    const double w =
        u_side ? (r < 1.0 ? std::pow(1.0 - r * r, p.alpha / 2.0) : 0.0) : 1.0;
    if (u_side && r >= 1.0) continue;
    mode_profiles(c, r, eig_ptr, pn, prof);
    for (std::size_t ang = 0; ang < ang_count; ++ang) {
      double acc = 0.0;
      for (int lm = 0; lm < n_lm; ++lm) {
        acc += prof[lm] * ytab[static_cast<std::size_t>(lm) * ang_count + ang];
      }
      values[i * ang_count + ang] = w * acc;
    }
  }
  return values;
}

}  // namespace

std::vector<double> synth_u(const CoefficientField& c, const EvalGrid& grid) {
  return synth_impl(c, grid, /*u_side=*/true);
}

std::vector<double> synth_f(const CoefficientField& c, const EvalGrid& grid) {
  return synth_impl(c, grid, /*u_side=*/false);
}

namespace {

std::vector<double> synth_radial_impl(const CoefficientField& c,
                                      const std::vector<double>& r,
                                      bool u_side) {
  require_u_side(c, u_side ? "synth_u_radial" : "synth_f_radial");
  const ProblemParams& p = c.params;
  const double a = p.alpha / 2.0;
  const double harm = p.dim == 2 ? 1.0 : 1.0 / std::sqrt(4.0 * M_PI);
  std::vector<double> factor(c.n_max + 1, 1.0);
  if (!u_side) {
    for (int n = 0; n <= c.n_max; ++n) factor[n] = basis::eigenvalue(p, n, 0);
  }
  std::vector<double> pn(c.n_max + 1);
  std::vector<double> values(r.size(), 0.0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (u_side && r[i] >= 1.0) continue;
    special::jacobi_eval_sequence(a, jacobi_b(p, 0), c.n_max,
                                  2.0 * r[i] * r[i] - 1.0, pn.data());
    double acc = 0.0;
    for (int n = 0; n <= c.n_max; ++n) {
      acc += c.at(0, 0, n) * factor[n] * pn[n];
    }
    const double w = u_side ? std::pow(1.0 - r[i] * r[i], a) : 1.0;
    values[i] = harm * w * acc;
  }
  return values;
}

}  // namespace

std::vector<double> synth_u_radial(const CoefficientField& c,
                                   const std::vector<double>& r) {
  return synth_radial_impl(c, r, /*u_side=*/true);
}

std::vector<double> synth_f_radial(const CoefficientField& c,
                                   const std::vector<double>& r) {
  return synth_radial_impl(c, r, /*u_side=*/false);
}

CoefficientField to_f_side(const CoefficientField& c) {
  require_u_side(c, "to_f_side");
  CoefficientField out = c;
  out.kind = FieldKind::FSide;
  for (int l = 0; l <= c.l_max; ++l) {
    for (int ch = 0; ch < c.channels(l); ++ch) {
      for (int n = 0; n <= c.n_max; ++n) {
        out.at(l, ch, n) = c.at(l, ch, n) * basis::eigenvalue(c.params, n, l);
      }
    }
  }
  return out;
}

CoefficientField to_u_side(const CoefficientField& c) {
  if (c.kind != FieldKind::FSide) {
    throw std::invalid_argument("to_u_side: expected an F-side field");
  }
  CoefficientField out = c;
  out.kind = FieldKind::USide;
  for (int l = 0; l <= c.l_max; ++l) {
    for (int ch = 0; ch < c.channels(l); ++ch) {
      for (int n = 0; n <= c.n_max; ++n) {
        out.at(l, ch, n) = c.at(l, ch, n) / basis::eigenvalue(c.params, n, l);
      }
    }
  }
  return out;
}

double sup_error(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("sup_error: shape mismatch (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

}  // namespace fraclap::transform
