#include "fraclap/diffusion.hpp"

#include <cmath>
#include <stdexcept>

#include "fraclap/quadrature.hpp"
#include "fraclap/special.hpp"
#include "fraclap/transform.hpp"

namespace fraclap::diffusion {

namespace {

void validate_3d(const ProblemParams& p) {
  p.validate();
  if (p.dim != 3) {
    throw std::invalid_argument("diffusion: the radial scheme is 3D only");
  }
}

}  // namespace

DiffusionSystem assemble(const ProblemParams& p, int n_modes, double dt) {
  validate_3d(p);
  if (n_modes < 1) throw std::invalid_argument("assemble: n_modes must be >= 1");
  if (!(dt > 0.0)) throw std::invalid_argument("assemble: dt must be positive");

  DiffusionSystem sys;
  sys.params = p;
  sys.n_modes = n_modes;
  sys.dt = dt;

  const double a = p.alpha / 2.0;
  const double b = 0.5;  // Jacobi parameter for d = 3, l = 0
  const int nm = n_modes;
  std::vector<double> pn(nm);

  // B: weighted Gram diagonal, int w P_m^2 r^2 dr.
  sys.b_diag.assign(nm, 0.0);
  {
    const quad::QuadratureRule rule = quad::build_radial_rule(p.alpha, 2 * nm + 2);
    for (int i = 0; i < rule.size(); ++i) {
      const double r = rule.nodes[i];
      special::jacobi_eval_sequence(a, b, nm - 1, 2.0 * r * r - 1.0, pn.data());
      const double rfac = r * r * rule.weights[i];
      for (int m = 0; m < nm; ++m) sys.b_diag[m] += pn[m] * pn[m] * rfac;
    }
  }

  // A: unweighted Gram matrix, int P_m P_n r^2 dr; polynomial integrand, so
  // plain Gauss-Legendre is exact.
  sys.a.n = static_cast<std::size_t>(nm);
  sys.a.a.assign(static_cast<std::size_t>(nm) * nm, 0.0);
  {
    const quad::AngularRule gl = quad::gauss_legendre_01(nm + 2);
    for (int i = 0; i < gl.size(); ++i) {
      const double r = gl.nodes[i];
      special::jacobi_eval_sequence(a, b, nm - 1, 2.0 * r * r - 1.0, pn.data());
      const double rfac = r * r * gl.weights[i];
      for (int m = 0; m < nm; ++m) {
        for (int n = m; n < nm; ++n) {
          sys.a.at(m, n) += pn[m] * pn[n] * rfac;
        }
      }
    }
    for (int m = 0; m < nm; ++m) {
      for (int n = 0; n < m; ++n) sys.a.at(m, n) = sys.a.at(n, m);
    }
  }

  sys.d_diag.resize(nm);
  for (int m = 0; m < nm; ++m) {
    sys.d_diag[m] = basis::eigenvalue(p, m, 0);
  }

  // Stepping operator I + dt B^{-1} A D, factored once.
  linalg::DenseMatrix op = linalg::DenseMatrix::identity(sys.a.n);
  for (int i = 0; i < nm; ++i) {
    for (int j = 0; j < nm; ++j) {
      op.at(i, j) += dt * sys.a.at(i, j) * sys.d_diag[j] / sys.b_diag[i];
    }
  }
  sys.stepper = linalg::lu_factor(op);
  return sys;
}

DiffusionState init_state(const ProblemParams& p, int n_modes,
                          const std::function<double(double)>& u0) {
  validate_3d(p);
  if (n_modes < 1) throw std::invalid_argument("init_state: n_modes must be >= 1");
  const transform::CoefficientField field =
      transform::analyze_u_radial(p, u0, n_modes - 1);
  DiffusionState s;
  s.t = 0.0;
  s.c.resize(n_modes);
  for (int n = 0; n < n_modes; ++n) s.c[n] = field.at(0, 0, n);
  return s;
}

DiffusionState step(const DiffusionSystem& sys, const DiffusionState& s) {
  if (s.c.size() != static_cast<std::size_t>(sys.n_modes)) {
    throw std::invalid_argument("step: state dimension mismatch");
  }
  DiffusionState next;
  next.c = sys.stepper.solve(s.c);
  next.t = s.t + sys.dt;
  return next;
}

EvolveResult evolve(const DiffusionSystem& sys, const DiffusionState& s0,
                    double t_final) {
  if (t_final < 0.0) throw std::invalid_argument("evolve: t_final must be >= 0");
  const double steps_real = t_final / sys.dt;
  const long steps = std::lround(steps_real);
  if (std::abs(steps_real - steps) > 1e-9 * std::max(1.0, steps_real)) {
    throw std::invalid_argument(
        "evolve: t_final must be an integer multiple of dt");
  }
  EvolveResult out;
  out.state = s0;
  out.coeff_norms.reserve(steps);
  for (long k = 0; k < steps; ++k) {
    out.state = step(sys, out.state);
    double norm = 0.0;
    for (double v : out.state.c) norm += v * v;
    out.coeff_norms.push_back(std::sqrt(norm));
  }
  return out;
}

std::vector<double> radial_profile(const DiffusionSystem& sys,
                                   const DiffusionState& s,
                                   const std::vector<double>& r) {
  transform::CoefficientField field = transform::CoefficientField::zeros(
      sys.params, sys.n_modes - 1, 0, transform::FieldKind::USide);
  for (int n = 0; n < sys.n_modes; ++n) field.at(0, 0, n) = s.c[n];
  return transform::synth_u_radial(field, r);
}

}  // namespace fraclap::diffusion
