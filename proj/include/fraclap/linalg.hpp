#pragma once

#include <cstddef>
#include <vector>

namespace fraclap::linalg {

/// Symmetric tridiagonal matrix: diag has length K, offdiag length K-1.
struct SymTridiag {
  std::vector<double> diag;
  std::vector<double> offdiag;
};

/// Full eigendecomposition T = V diag(values) V^T. Eigenvalues ascending;
/// vectors stored column-major: vectors[i + K*j] is component i of the
/// j-th eigenvector.
struct EigenDecomp {
  std::vector<double> values;
  std::vector<double> vectors;
  std::size_t size = 0;

  double vec(std::size_t i, std::size_t j) const {
    return vectors[i + size * j];
  }
};

/// Implicit QL iterations with Wilkinson shift, accumulating eigenvectors.
/// Throws std::runtime_error with the offending index after 30*K total
/// iterations without convergence.
EigenDecomp tridiag_eig(const SymTridiag& t);

/// Dense square matrix, row-major.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<double> a;  // n*n entries

  double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  static DenseMatrix identity(std::size_t n);
};

/// LU factorization with partial pivoting, reusable for many solves.
struct LuFactor {
  std::size_t n = 0;
  std::vector<double> lu;      // packed L\U, row-major
  std::vector<int> perm;       // row permutation

  std::vector<double> solve(const std::vector<double>& rhs) const;
};

/// Throws std::runtime_error if a pivot falls below 1e-300 in magnitude.
LuFactor lu_factor(const DenseMatrix& m);

/// One-shot solve of m x = rhs.
std::vector<double> lu_solve(const DenseMatrix& m,
                             const std::vector<double>& rhs);

}  // namespace fraclap::linalg
