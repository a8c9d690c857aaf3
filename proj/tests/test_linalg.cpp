#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "fraclap/linalg.hpp"

using namespace fraclap;
using linalg::DenseMatrix;
using linalg::SymTridiag;

namespace {

double det_by_recurrence(const SymTridiag& t) {
  double dm2 = 1.0;
  double dm1 = t.diag[0];
  for (std::size_t k = 1; k < t.diag.size(); ++k) {
    const double d =
        t.diag[k] * dm1 - t.offdiag[k - 1] * t.offdiag[k - 1] * dm2;
    dm2 = dm1;
    dm1 = d;
  }
  return dm1;
}

}  // namespace

TEST_CASE("tridiag_eig trivial and 2x2 cases") {
  const auto e1 = linalg::tridiag_eig({{2.0}, {}});
  CHECK(e1.values[0] == doctest::Approx(2.0));
  CHECK(std::abs(e1.vec(0, 0)) == doctest::Approx(1.0));

  const auto e2 = linalg::tridiag_eig({{0.0, 0.0}, {1.0}});
  CHECK(e2.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(e2.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < 2; ++j) {
    CHECK(std::abs(e2.vec(0, j)) == doctest::Approx(inv_sqrt2).epsilon(1e-13));
    CHECK(std::abs(e2.vec(1, j)) == doctest::Approx(inv_sqrt2).epsilon(1e-13));
  }
}

TEST_CASE("tridiag_eig 3x3 Toeplitz") {
  const auto e = linalg::tridiag_eig({{2.0, 2.0, 2.0}, {1.0, 1.0}});
  CHECK(e.values[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-13));
  CHECK(e.values[1] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(e.values[2] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("tridiag_eig invariants on random matrices") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> unif(1.0, 2.0);
  std::uniform_real_distribution<double> off(0.05, 0.5);
  for (int k : {3, 10, 25, 50}) {
    SymTridiag t;
    t.diag.resize(k);
    t.offdiag.resize(k - 1);
    double tnorm = 0.0, trace = 0.0;
    for (int i = 0; i < k; ++i) {
      t.diag[i] = unif(rng);
      trace += t.diag[i];
      tnorm = std::max(tnorm, std::abs(t.diag[i]));
    }
    for (int i = 0; i + 1 < k; ++i) {
      t.offdiag[i] = off(rng);
      tnorm = std::max(tnorm, std::abs(t.offdiag[i]));
    }
    const auto e = linalg::tridiag_eig(t);

    // Ascending order.
    for (int j = 1; j < k; ++j) CHECK(e.values[j] >= e.values[j - 1]);

    // V^T V = I.
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        double dot = 0.0;
        for (int m = 0; m < k; ++m) dot += e.vec(m, i) * e.vec(m, j);
        CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) <= 1e-10);
      }
    }

    // T V = V Lambda.
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < k; ++i) {
        double tv = t.diag[i] * e.vec(i, j);
        if (i > 0) tv += t.offdiag[i - 1] * e.vec(i - 1, j);
        if (i + 1 < k) tv += t.offdiag[i] * e.vec(i + 1, j);
        CHECK(std::abs(tv - e.values[j] * e.vec(i, j)) <= 1e-9 * tnorm);
      }
    }

    // Trace and determinant.
    double sum = 0.0, prod = 1.0;
    for (int j = 0; j < k; ++j) {
      sum += e.values[j];
      prod *= e.values[j];
    }
    CHECK(std::abs(sum - trace) <= 1e-10 * std::abs(trace));
    const double det = det_by_recurrence(t);
    CHECK(std::abs(prod - det) <= 1e-8 * std::abs(det));
  }
}

TEST_CASE("lu_solve fixed cases") {
  DenseMatrix eye = DenseMatrix::identity(3);
  const std::vector<double> rhs{1.0, -2.0, 3.0};
  CHECK(linalg::lu_solve(eye, rhs) == rhs);

  DenseMatrix diag;
  diag.n = 2;
  diag.a = {2.0, 0.0, 0.0, 4.0};
  const auto x1 = linalg::lu_solve(diag, {2.0, 8.0});
  CHECK(x1[0] == doctest::Approx(1.0));
  CHECK(x1[1] == doctest::Approx(2.0));

  DenseMatrix m;
  m.n = 2;
  m.a = {1.0, 2.0, 3.0, 4.0};
  const auto x2 = linalg::lu_solve(m, {5.0, 11.0});
  CHECK(x2[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(x2[1] == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("lu_solve residual on random well-conditioned systems") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int n : {4, 16, 64}) {
    DenseMatrix m;
    m.n = n;
    m.a.resize(static_cast<std::size_t>(n) * n);
    for (auto& v : m.a) v = unif(rng);
    for (int i = 0; i < n; ++i) m.at(i, i) += n;  // diagonally dominant
    std::vector<double> rhs(n);
    double rhs_norm = 0.0;
    for (auto& v : rhs) {
      v = unif(rng);
      rhs_norm = std::max(rhs_norm, std::abs(v));
    }
    const auto x = linalg::lu_solve(m, rhs);
    for (int i = 0; i < n; ++i) {
      double res = -rhs[i];
      for (int j = 0; j < n; ++j) res += m.at(i, j) * x[j];
      CHECK(std::abs(res) <= 1e-10 * rhs_norm);
    }
  }
}

TEST_CASE("lu_factor rejects singular matrices") {
  DenseMatrix z;
  z.n = 3;
  z.a.assign(9, 0.0);
  CHECK_THROWS_AS(linalg::lu_factor(z), std::runtime_error);
}
