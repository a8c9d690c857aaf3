#include "fraclap/experiments.hpp"

#include <cmath>
#include <stdexcept>

#include "fraclap/special.hpp"
#include "fraclap/transform.hpp"

namespace fraclap::experiments {

using basis::ProblemParams;
using basis::Vec3;
using transform::EvalGrid;

double beta_moment(double alpha, int degree) {
  if (degree < 0) throw std::invalid_argument("beta_moment: degree must be >= 0");
  using special::log_gamma;
  const double p = (degree + 1.0) / 2.0;
  const double q = alpha / 2.0 + 1.0;
  return 0.5 * std::exp(log_gamma(p) + log_gamma(q) - log_gamma(p + q));
}

QuadratureExperiment run_quadrature(double alpha, int k, int fine_n) {
  QuadratureExperiment out;
  out.rule = quad::build_radial_rule(alpha, k, fine_n);
  for (double w : out.rule.weights) out.weight_sum += w;
  out.moment_residuals.resize(2 * k);
  for (int deg = 0; deg < 2 * k; ++deg) {
    double moment = 0.0;
    for (int i = 0; i < out.rule.size(); ++i) {
      moment += std::pow(out.rule.nodes[i], deg) * out.rule.weights[i];
    }
    out.moment_residuals[deg] = std::abs(moment - beta_moment(alpha, deg));
  }
  return out;
}

std::vector<TableSRow> table_s_rows(const std::vector<double>& alphas, int dim,
                                    const std::vector<int>& s_list,
                                    const std::vector<int>& n_list) {
  if (dim != 2 && dim != 3) {
    throw std::invalid_argument("table_s_rows: dim must be 2 or 3");
  }
  const EvalGrid grid =
      dim == 2 ? EvalGrid::ball_2d() : EvalGrid::ball_3d();
  std::vector<TableSRow> rows;
  for (double alpha : alphas) {
    const ProblemParams p{alpha, dim};
    for (int s : s_list) {
      if (s < 0) throw std::invalid_argument("table_s_rows: s must be >= 0");
      const double expo = alpha / 2.0 + s;
      auto u = [dim, expo](const Vec3& x) {
        const double r2 = dim == 2 ? x.x * x.x + x.y * x.y
                                   : x.x * x.x + x.y * x.y + x.z * x.z;
        return r2 >= 1.0 ? 0.0 : std::pow(1.0 - r2, expo);
      };
      // The under-truncated runs still project data of radial degree 2s,
      // so the quadrature is sized for the data, not the truncation.
      transform::TransformOptions opt;
      opt.k_radial = 2 * (kTableRefN + s) + 4;
      const std::vector<double> ref =
          ops::apply_fractional_laplacian(p, u, kTableRefN, 0, grid, opt);
      for (int n : n_list) {
        const std::vector<double> fn =
            ops::apply_fractional_laplacian(p, u, n, 0, grid, opt);
        rows.push_back({alpha, dim, s, n, transform::sup_error(fn, ref)});
      }
    }
  }
  return rows;
}

std::vector<PoissonRow> poisson_table_rows(const std::vector<double>& alphas) {
  // The benchmark error region: outer annulus of the disk.
  const EvalGrid grid = EvalGrid::ball_2d(1000, 32, 0.5, 1.0);
  std::vector<PoissonRow> rows;
  for (double alpha : alphas) {
    const ProblemParams p{alpha, 2};
    for (int eq = 1; eq <= 4; ++eq) {
      const ops::AnalyticPair pair = ops::analytic_pair(eq, p);
      const int l_max = pair.min_l;
      const std::vector<double> ref =
          ops::solve_poisson(p, pair.f, kTableRefN, l_max, grid);
      for (int n = 0; n <= 2; ++n) {
        const std::vector<double> un =
            ops::solve_poisson(p, pair.f, n, l_max, grid);
        rows.push_back({alpha, eq, l_max, n, transform::sup_error(un, ref)});
      }
    }
  }
  return rows;
}

std::vector<OscRow> oscillatory_rows(double alpha,
                                     const std::vector<int>& n_list) {
  const ProblemParams p{alpha, 2};
  auto f = [](double r) { return r * r * std::cos(16.0 * r); };
  std::vector<double> r_grid(1000);
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    r_grid[i] = i / (r_grid.size() - 1.0);
  }
  const transform::CoefficientField ref_field =
      transform::analyze_f_radial(p, f, kOscRefN);
  const std::vector<double> ref = transform::synth_u_radial(ref_field, r_grid);
  std::vector<OscRow> rows;
  for (int n : n_list) {
    if (n < 0) throw std::invalid_argument("oscillatory_rows: n must be >= 0");
    const transform::CoefficientField field =
        transform::analyze_f_radial(p, f, n);
    const std::vector<double> un = transform::synth_u_radial(field, r_grid);
    rows.push_back({n, transform::sup_error(un, ref)});
  }
  return rows;
}

DiffusionExperiment diffusion_rows(const std::vector<double>& alphas,
                                   const std::vector<double>& dts,
                                   double t_final, int n_modes) {
  std::vector<double> r_grid(201);
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    r_grid[i] = i / (r_grid.size() - 1.0);
  }
  DiffusionExperiment out;
  for (double alpha : alphas) {
    const ProblemParams p{alpha, 3};
    auto u0 = [alpha](double r) {
      return std::pow(1.0 - r * r, alpha / 2.0);
    };
    const diffusion::DiffusionState s0 = diffusion::init_state(p, n_modes, u0);

    const diffusion::DiffusionSystem ref_sys =
        diffusion::assemble(p, n_modes, kDiffusionRefDt);
    const diffusion::EvolveResult ref_run =
        diffusion::evolve(ref_sys, s0, t_final);
    const std::vector<double> ref_profile =
        diffusion::radial_profile(ref_sys, ref_run.state, r_grid);

    for (std::size_t i = 0; i < r_grid.size(); ++i) {
      out.profiles.push_back({alpha, r_grid[i], ref_profile[i]});
    }
    for (double dt : dts) {
      const diffusion::DiffusionSystem sys = diffusion::assemble(p, n_modes, dt);
      const diffusion::EvolveResult run = diffusion::evolve(sys, s0, t_final);
      const std::vector<double> profile =
          diffusion::radial_profile(sys, run.state, r_grid);
      out.errors.push_back(
          {alpha, dt, transform::sup_error(profile, ref_profile)});
    }
  }
  return out;
}

DecayExperiment coeff_decay_rows(double alpha, int n_max) {
  if (n_max < 2) throw std::invalid_argument("coeff_decay_rows: n_max must be >= 2");
  const ProblemParams p{alpha, 2};
  auto u = [](double r) { return 1.0 - r * r; };
  transform::TransformOptions opt;
  opt.u_numerator = transform::TransformOptions::UNumerator::PlainGaussLegendre;
  const transform::CoefficientField field =
      transform::analyze_u_radial(p, u, n_max, opt);

  DecayExperiment out;
  std::vector<double> log_n, log_c, lin_n;
  for (int n = 0; n <= n_max; ++n) {
    const double c = std::abs(field.at(0, 0, n));
    out.rows.push_back({n, c});
    if (n >= 1) {
      log_n.push_back(std::log(static_cast<double>(n)));
      lin_n.push_back(static_cast<double>(n));
      log_c.push_back(std::log(c));
    }
  }
  const LinearFit loglog = fit_line(log_n, log_c);
  const LinearFit semilog = fit_line(lin_n, log_c);
  out.loglog_slope = loglog.slope;
  out.loglog_residual = loglog.rms_residual;
  out.semilog_residual = semilog.rms_residual;
  return out;
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_line: need two or more paired samples");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  LinearFit fit;
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / n);
  return fit;
}

}  // namespace fraclap::experiments
