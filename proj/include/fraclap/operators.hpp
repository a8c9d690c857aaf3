#pragma once

#include "fraclap/transform.hpp"

namespace fraclap::ops {

using basis::ProblemParams;
using basis::Vec3;
using transform::EvalGrid;
using transform::PointFn;
using transform::TransformOptions;

/// One of the four closed-form (u, f) pairs with
/// (-Delta)^{alpha/2} u = f on the unit ball:
///   eq1: u = (1-|x|^2)^{alpha/2}
///   eq2: u = (1-|x|^2)^{alpha/2 + 1}
///   eq3: u = (1-|x|^2)^{alpha/2} x_d
///   eq4: u = (1-|x|^2)^{alpha/2 + 1} x_d
/// The last coordinate x_d is x_2 = r sin(theta) in 2D and z in 3D.
/// eq1/eq2 are radial (L = 0 suffices); eq3/eq4 need L = 1.
struct AnalyticPair {
  int id = 1;
  ProblemParams params;
  PointFn u;
  PointFn f;
  int min_l = 0;  // smallest L that represents the pair
  int min_n = 0;  // smallest N for exact representation
};

/// Throws std::invalid_argument for ids outside 1..4.
AnalyticPair analytic_pair(int id, const ProblemParams& p);

/// Forward operator: project u (which must vanish outside the ball) onto
/// the truncated basis and evaluate (-Delta)^{alpha/2} u on the grid.
std::vector<double> apply_fractional_laplacian(const ProblemParams& p,
                                               const PointFn& u, int n_max,
                                               int l_max, const EvalGrid& grid,
                                               const TransformOptions& opt = {});

/// Fractional Poisson solve: project f, divide by eigenvalues, synthesize
/// the weighted solution on the grid. The solution is exactly zero at any
/// grid point with r >= 1.
std::vector<double> solve_poisson(const ProblemParams& p, const PointFn& f,
                                  int n_max, int l_max, const EvalGrid& grid,
                                  const TransformOptions& opt = {});

}  // namespace fraclap::ops
