#pragma once

#include <functional>
#include <vector>

#include "fraclap/basis.hpp"
#include "fraclap/linalg.hpp"

namespace fraclap::diffusion {

using basis::ProblemParams;

/// Implicit-Euler stepping system for the radial 3D fractional diffusion
/// equation in coefficient space:
///   (I + dt B^{-1} A D) c^{k+1} = c^k
/// with B = diag(int w P_m^2 r^2 dr), A = {int P_m P_n r^2 dr} (no weight),
/// D = diag(d^{alpha,3}_{m,0}), P_m = P_m^{(alpha/2, 1/2)}(2r^2 - 1).
struct DiffusionSystem {
  ProblemParams params;   // dim enforced to 3
  int n_modes = 0;
  double dt = 0.0;
  linalg::DenseMatrix a;          // Gram matrix, symmetric positive definite
  std::vector<double> b_diag;     // positive
  std::vector<double> d_diag;     // eigenvalues, >= 2^alpha
  linalg::LuFactor stepper;       // factored I + dt B^{-1} A D
};

struct DiffusionState {
  std::vector<double> c;
  double t = 0.0;
};

/// Builds and factors the stepping system. A is assembled with an
/// (n_modes + 2)-node Gauss-Legendre rule (its integrand is polynomial),
/// B with the weighted radial rule.
DiffusionSystem assemble(const ProblemParams& p, int n_modes, double dt);

/// Expands the radial initial datum in the truncated series; coefficients
/// follow the 3D convention (so u0 = (1-r^2)^{alpha/2} gives
/// c = (sqrt(4 pi), 0, ..., 0)).
DiffusionState init_state(const ProblemParams& p, int n_modes,
                          const std::function<double(double)>& u0);

/// One implicit-Euler step; advances t by dt.
DiffusionState step(const DiffusionSystem& sys, const DiffusionState& s);

struct EvolveResult {
  DiffusionState state;
  std::vector<double> coeff_norms;  // ||c|| after each step
};

/// Steps from s0 to t_final, which must be an integer multiple of dt.
EvolveResult evolve(const DiffusionSystem& sys, const DiffusionState& s0,
                    double t_final);

/// Radial solution profile u(r, t) for the state's coefficients.
std::vector<double> radial_profile(const DiffusionSystem& sys,
                                   const DiffusionState& s,
                                   const std::vector<double>& r);

}  // namespace fraclap::diffusion
