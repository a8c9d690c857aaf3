#include "fraclap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fraclap::linalg {

EigenDecomp tridiag_eig(const SymTridiag& t) {
  const std::size_t n = t.diag.size();
  if (n == 0) throw std::invalid_argument("tridiag_eig: empty matrix");
  if (t.offdiag.size() + 1 != n) {
    throw std::invalid_argument("tridiag_eig: offdiag must have length K-1");
  }
  for (double v : t.diag) {
    if (!std::isfinite(v)) throw std::invalid_argument("tridiag_eig: non-finite entry");
  }
  for (double v : t.offdiag) {
    if (!std::isfinite(v)) throw std::invalid_argument("tridiag_eig: non-finite entry");
  }

  EigenDecomp out;
  out.size = n;
  out.values = t.diag;
  out.vectors.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) out.vectors[i + n * i] = 1.0;

  // e holds the subdiagonal shifted up by one, EISPACK tql2 style.
  std::vector<double> d = t.diag;
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = t.offdiag[i];

  const long max_total_iters = 30 * static_cast<long>(n);
  long iters = 0;

  for (std::size_t l = 0; l < n; ++l) {
    while (true) {
      // Find a negligible subdiagonal element.
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 1e-16 * dd) break;
      }
      if (m == l) break;
      if (++iters > max_total_iters) {
        throw std::runtime_error(
            "tridiag_eig: no convergence at eigenvalue index " +
            std::to_string(l));
      }
      // Wilkinson shift.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        // Accumulate the rotation into the eigenvector matrix.
        for (std::size_t k = 0; k < n; ++k) {
          f = out.vectors[k + n * (i + 1)];
          out.vectors[k + n * (i + 1)] = s * out.vectors[k + n * i] + c * f;
          out.vectors[k + n * i] = c * out.vectors[k + n * i] - s * f;
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  // Sort ascending, reordering eigenvector columns.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  std::vector<double> sorted_vals(n);
  std::vector<double> sorted_vecs(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    sorted_vals[j] = d[order[j]];
    for (std::size_t i = 0; i < n; ++i) {
      sorted_vecs[i + n * j] = out.vectors[i + n * order[j]];
    }
  }
  out.values = std::move(sorted_vals);
  out.vectors = std::move(sorted_vecs);
  return out;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m;
  m.n = n;
  m.a.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

LuFactor lu_factor(const DenseMatrix& m) {
  const std::size_t n = m.n;
  if (n == 0 || m.a.size() != n * n) {
    throw std::invalid_argument("lu_factor: matrix must be square and non-empty");
  }
  LuFactor f;
  f.n = n;
  f.lu = m.a;
  f.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.perm[i] = static_cast<int>(i);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double pmax = std::abs(f.lu[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(f.lu[i * n + k]);
      if (v > pmax) {
        pmax = v;
        piv = i;
      }
    }
    if (pmax < 1e-300) {
      throw std::runtime_error("lu_factor: numerically singular pivot at column " +
                               std::to_string(k));
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(f.lu[k * n + j], f.lu[piv * n + j]);
      }
      std::swap(f.perm[k], f.perm[piv]);
    }
    const double pivot = f.lu[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double mult = f.lu[i * n + k] / pivot;
      f.lu[i * n + k] = mult;
      for (std::size_t j = k + 1; j < n; ++j) {
        f.lu[i * n + j] -= mult * f.lu[k * n + j];
      }
    }
  }
  return f;
}

std::vector<double> LuFactor::solve(const std::vector<double>& rhs) const {
  if (rhs.size() != n) {
    throw std::invalid_argument("LuFactor::solve: rhs length mismatch");
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[perm[i]];
  for (std::size_t i = 1; i < n; ++i) {
    double s = x[i];
    for (std::size_t j = 0; j < i; ++j) s -= lu[i * n + j] * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= lu[i * n + j] * x[j];
    x[i] = s / lu[i * n + i];
  }
  return x;
}

std::vector<double> lu_solve(const DenseMatrix& m,
                             const std::vector<double>& rhs) {
  return lu_factor(m).solve(rhs);
}

}  // namespace fraclap::linalg
