#pragma once

#include <vector>

#include "fraclap/diffusion.hpp"
#include "fraclap/operators.hpp"
#include "fraclap/quadrature.hpp"

namespace fraclap::experiments {

/// Reference truncations used by the error protocols: errors are always
/// measured against a same-pipeline run at these settings.
inline constexpr int kTableRefN = 5;
inline constexpr int kOscRefN = 40;
inline constexpr double kDiffusionRefDt = 1.0 / 4096.0;  // 2^-12

/// Exact moment of the radial weight:
///   int_0^1 r^m (1-r^2)^{alpha/2} dr = (1/2) B((m+1)/2, alpha/2 + 1).
double beta_moment(double alpha, int degree);

struct QuadratureExperiment {
  quad::QuadratureRule rule;
  double weight_sum = 0.0;
  std::vector<double> moment_residuals;  // |rule - oracle|, degrees 0..2k-1
};

QuadratureExperiment run_quadrature(double alpha, int k,
                                    int fine_n = quad::kDefaultFineN);

/// Forward-operator truncation table: error of the n-truncated fractional
/// Laplacian of u = (1-|x|^2)^{alpha/2+s} against the n = 5 reference,
/// sup norm over the standard ball grid.
struct TableSRow {
  double alpha;
  int dim;
  int s;
  int n;
  double error;
};

std::vector<TableSRow> table_s_rows(const std::vector<double>& alphas, int dim,
                                    const std::vector<int>& s_list,
                                    const std::vector<int>& n_list);

/// Poisson benchmark table over the four analytic pairs. Errors are sup
/// norms of u_n against the n = 5 reference solve, measured over a polar
/// grid on the outer annulus 0.5 <= r <= 1 (2D).
struct PoissonRow {
  double alpha;
  int eq;
  int l_max;
  int n;
  double error;
};

std::vector<PoissonRow> poisson_table_rows(const std::vector<double>& alphas);

/// Oscillatory right-hand side f = |x|^2 cos(16 |x|) (2D, radial):
/// ||u_n - u_40||_inf on a radial grid.
struct OscRow {
  int n;
  double error;
};

std::vector<OscRow> oscillatory_rows(double alpha,
                                     const std::vector<int>& n_list);

/// Radial 3D diffusion: per (alpha, dt) the sup-norm deviation at t_final
/// from the dt = 2^-12 reference, plus the reference solution profile.
struct DiffusionExperiment {
  struct ErrorRow {
    double alpha;
    double dt;
    double error;
  };
  struct ProfileRow {
    double alpha;
    double r;
    double u;
  };
  std::vector<ErrorRow> errors;
  std::vector<ProfileRow> profiles;
};

DiffusionExperiment diffusion_rows(const std::vector<double>& alphas,
                                   const std::vector<double>& dts,
                                   double t_final, int n_modes);

/// Coefficient decay of u = 1 - |x|^2 (2D): the u is polynomial, so the
/// projection numerators are integrated with the plain Gauss-Legendre
/// route and the coefficients are exact to roundoff.
struct DecayExperiment {
  struct Row {
    int n;
    double c_abs;
  };
  std::vector<Row> rows;
  double loglog_slope = 0.0;
  double loglog_residual = 0.0;   // RMS residual of the log-log line fit
  double semilog_residual = 0.0;  // RMS residual of the semilog line fit
};

DecayExperiment coeff_decay_rows(double alpha, int n_max);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace fraclap::experiments
