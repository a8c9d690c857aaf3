// Command-line front end for the fractional-Laplacian spectral solver:
// quadrature construction, operator truncation tables, the Poisson
// benchmark table, the oscillatory right-hand side, radial diffusion
// stepping, and the coefficient-decay experiment. Every subcommand emits
// deterministic CSV.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fraclap/csv.hpp"
#include "fraclap/experiments.hpp"

namespace {

using fraclap::csvio::CsvWriter;
using fraclap::csvio::fmt;
namespace experiments = fraclap::experiments;

std::string join_doubles(const std::vector<double>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ";";
    os << fmt(v[i]);
  }
  return os.str();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  return os;
}

int run_quadrature(const std::vector<double>& alphas, int k, int fine_n,
                   const std::string& out) {
  if (alphas.size() != 1) {
    throw CLI::ValidationError("quadrature expects exactly one --alpha");
  }
  const double alpha = alphas[0];
  const experiments::QuadratureExperiment q =
      experiments::run_quadrature(alpha, k, fine_n);
  std::ofstream os = open_out(out);
  CsvWriter csv(os,
                "fraclap quadrature alpha=" + fmt(alpha) + " k=" + fmt(k) +
                    " fine_n=" + fmt(fine_n),
                {"i", "node", "weight"});
  for (int i = 0; i < q.rule.size(); ++i) {
    csv.row({fmt(i), fmt(q.rule.nodes[i]), fmt(q.rule.weights[i])});
  }
  std::cout << "sum_weights=" << fmt(q.weight_sum) << "\n";
  for (int deg = 0; deg < 2 * k; ++deg) {
    std::cout << "moment_residual degree=" << deg << " abs="
              << fmt(q.moment_residuals[deg]) << "\n";
  }
  std::cout << "wrote " << out << "\n";
  return 0;
}

int run_table_s(const std::vector<double>& alphas, int dim, int n_max,
                const std::string& out) {
  std::vector<int> s_list{0, 1, 2, 3};
  std::vector<int> n_list;
  for (int n = 0; n <= n_max; ++n) n_list.push_back(n);
  const auto rows = experiments::table_s_rows(alphas, dim, s_list, n_list);
  std::ofstream os = open_out(out);
  CsvWriter csv(os,
                "fraclap table-s alpha=" + join_doubles(alphas) +
                    " dim=" + fmt(dim) + " s=0..3 n=0.." + fmt(n_max) +
                    " n_ref=" + fmt(experiments::kTableRefN) +
                    " grid=1000x" + (dim == 2 ? "32" : "16x16"),
                {"alpha", "dim", "s", "n", "error"});
  for (const auto& r : rows) {
    csv.row({fmt(r.alpha), fmt(r.dim), fmt(r.s), fmt(r.n), fmt(r.error)});
  }
  std::cout << "wrote " << out << "\n";
  return 0;
}

int run_poisson_table(const std::vector<double>& alphas,
                      const std::string& out) {
  const auto rows = experiments::poisson_table_rows(alphas);
  std::ofstream os = open_out(out);
  CsvWriter csv(os,
                "fraclap poisson-table alpha=" + join_doubles(alphas) +
                    " eq=1..4 n=0..2 n_ref=" + fmt(experiments::kTableRefN) +
                    " grid=1000x32 annulus=[0.5,1]",
                {"alpha", "eq", "L", "n", "error"});
  for (const auto& r : rows) {
    csv.row({fmt(r.alpha), fmt(r.eq), fmt(r.l_max), fmt(r.n), fmt(r.error)});
  }
  std::cout << "wrote " << out << "\n";
  return 0;
}

int run_oscillatory(const std::vector<double>& alphas, int n_max,
                    const std::string& out) {
  if (alphas.size() != 1) {
    throw CLI::ValidationError("oscillatory expects exactly one --alpha");
  }
  std::vector<int> n_list;
  for (int n = 5; n <= std::min(n_max, experiments::kOscRefN); n += 5) {
    n_list.push_back(n);
  }
  if (n_list.empty()) {
    throw CLI::ValidationError("oscillatory needs --n-max >= 5");
  }
  const auto rows = experiments::oscillatory_rows(alphas[0], n_list);
  std::ofstream os = open_out(out);
  CsvWriter csv(os,
                "fraclap oscillatory alpha=" + fmt(alphas[0]) + " n=5..step5.." +
                    fmt(n_list.back()) + " n_ref=" + fmt(experiments::kOscRefN) +
                    " grid=1000",
                {"n", "error"});
  for (const auto& r : rows) csv.row({fmt(r.n), fmt(r.error)});
  std::cout << "wrote " << out << "\n";
  return 0;
}

int run_diffusion(const std::vector<double>& alphas,
                  const std::vector<double>& dts, double t_final, int n_modes,
                  const std::string& out) {
  const auto result = experiments::diffusion_rows(alphas, dts, t_final, n_modes);
  std::ofstream os = open_out(out);
  const std::string config =
      "fraclap diffusion alpha=" + join_doubles(alphas) +
      " dt=" + join_doubles(dts) + " t_final=" + fmt(t_final) +
      " n_modes=" + fmt(n_modes) +
      " dt_ref=" + fmt(experiments::kDiffusionRefDt);
  CsvWriter csv(os, config, {"alpha", "dt", "error"});
  for (const auto& r : result.errors) {
    csv.row({fmt(r.alpha), fmt(r.dt), fmt(r.error)});
  }
  std::string profile_path = out;
  const std::size_t dot = profile_path.rfind(".csv");
  if (dot != std::string::npos && dot == profile_path.size() - 4) {
    profile_path.insert(dot, "_profile");
  } else {
    profile_path += "_profile.csv";
  }
  std::ofstream pos = open_out(profile_path);
  CsvWriter pcsv(pos, config + " profile=reference", {"alpha", "r", "u"});
  for (const auto& r : result.profiles) {
    pcsv.row({fmt(r.alpha), fmt(r.r), fmt(r.u)});
  }
  std::cout << "wrote " << out << " and " << profile_path << "\n";
  return 0;
}

int run_coeff_decay(const std::vector<double>& alphas, int n_max,
                    const std::string& out) {
  if (alphas.size() != 1) {
    throw CLI::ValidationError("coeff-decay expects exactly one --alpha");
  }
  const auto result = experiments::coeff_decay_rows(alphas[0], n_max);
  std::ofstream os = open_out(out);
  CsvWriter csv(os,
                "fraclap coeff-decay alpha=" + fmt(alphas[0]) + " n_max=" +
                    fmt(n_max),
                {"n", "abs_c00n"});
  for (const auto& r : result.rows) csv.row({fmt(r.n), fmt(r.c_abs)});
  std::cout << "loglog_slope=" << fmt(result.loglog_slope) << "\n";
  std::cout << "loglog_residual=" << fmt(result.loglog_residual) << "\n";
  std::cout << "semilog_residual=" << fmt(result.semilog_residual) << "\n";
  std::cout << "wrote " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral fractional-Laplacian solver on the unit ball"};
  app.require_subcommand(1);

  std::vector<double> alphas;
  std::vector<double> dts;
  int dim = 2;
  int n_max = -1;  // per-subcommand default
  int l_max = 1;
  int k = 8;
  int fine_n = fraclap::quad::kDefaultFineN;
  double t_final = 1.0;
  std::string out;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", alphas, "fractional index, repeatable");
    cmd->add_option("--dim", dim, "dimension (2 or 3)")->check(CLI::IsMember({2, 3}));
    cmd->add_option("--n-max", n_max, "radial truncation / mode count");
    cmd->add_option("--l-max", l_max, "harmonic truncation");
    cmd->add_option("--k", k, "quadrature rule size");
    cmd->add_option("--fine-n", fine_n, "fine seed-grid size");
    cmd->add_option("--dt", dts, "time step, repeatable");
    cmd->add_option("--t-final", t_final, "final time");
    cmd->add_option("--out", out, "output CSV path");
  };

  CLI::App* c_quad = app.add_subcommand("quadrature", "radial rule nodes/weights");
  CLI::App* c_tab = app.add_subcommand("table-s", "operator truncation errors");
  CLI::App* c_poi = app.add_subcommand("poisson-table", "Poisson benchmark errors");
  CLI::App* c_osc = app.add_subcommand("oscillatory", "oscillatory RHS convergence");
  CLI::App* c_dif = app.add_subcommand("diffusion", "radial diffusion stepping");
  CLI::App* c_dec = app.add_subcommand("coeff-decay", "coefficient decay of 1-|x|^2");
  for (CLI::App* cmd : {c_quad, c_tab, c_poi, c_osc, c_dif, c_dec}) {
    add_common(cmd);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (double a : alphas) {
      if (!(a > 0.0) || !(a < 2.0)) {
        throw CLI::ValidationError("--alpha must lie strictly in (0, 2)");
      }
    }
    if (k < 1) throw CLI::ValidationError("--k must be >= 1");
    if (fine_n < 16 * k) {
      throw CLI::ValidationError("--fine-n must be at least 16 times --k");
    }
    for (double dt : dts) {
      if (!(dt > 0.0)) throw CLI::ValidationError("--dt must be positive");
    }
    if (c_quad->parsed()) {
      if (alphas.empty()) alphas = {1.0};
      return run_quadrature(alphas, k, fine_n, out.empty() ? "quadrature.csv" : out);
    }
    if (c_tab->parsed()) {
      if (alphas.empty()) alphas = {0.5, 1.0, 1.5};
      if (n_max < 0) n_max = 4;
      return run_table_s(alphas, dim, n_max, out.empty() ? "table_s.csv" : out);
    }
    if (c_poi->parsed()) {
      if (alphas.empty()) alphas = {0.5, 1.0, 1.5};
      return run_poisson_table(alphas, out.empty() ? "poisson_table.csv" : out);
    }
    if (c_osc->parsed()) {
      if (alphas.empty()) alphas = {1.0};
      if (n_max < 0) n_max = 35;
      return run_oscillatory(alphas, n_max, out.empty() ? "oscillatory.csv" : out);
    }
    if (c_dif->parsed()) {
      if (alphas.empty()) alphas = {0.5, 1.0, 1.5};
      if (dts.empty()) {
        for (int e = 4; e <= 9; ++e) dts.push_back(std::ldexp(1.0, -e));
      }
      if (n_max < 0) n_max = 10;
      return run_diffusion(alphas, dts, t_final, n_max,
                           out.empty() ? "diffusion.csv" : out);
    }
    if (c_dec->parsed()) {
      if (alphas.empty()) alphas = {0.5};
      if (n_max < 0) n_max = 30;
      return run_coeff_decay(alphas, n_max, out.empty() ? "coeff_decay.csv" : out);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error,usage," << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error,runtime," << e.what() << "\n";
    return 1;
  }
  return 0;
}
