#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fraclap/basis.hpp"
#include "fraclap/special.hpp"

using namespace fraclap;
using basis::BasisIndex;
using basis::ProblemParams;
using special::Vec3;

TEST_CASE("multiplicity") {
  CHECK(basis::multiplicity(2, 3) == 2);
  CHECK(basis::multiplicity(3, 2) == 5);
  CHECK(basis::multiplicity(2, 0) == 1);
  CHECK(basis::multiplicity(3, 0) == 1);
  CHECK_THROWS_AS(basis::multiplicity(4, 1), std::invalid_argument);
}

TEST_CASE("eigenvalues at closed-form points") {
  CHECK(basis::eigenvalue({1.0, 2}, 0, 0) ==
        doctest::Approx(M_PI / 2.0).epsilon(1e-13));
  CHECK(basis::eigenvalue({1.0, 3}, 0, 0) == doctest::Approx(2.0).epsilon(1e-13));
  const double g125 = std::exp(special::log_gamma(1.25));
  CHECK(basis::eigenvalue({0.5, 2}, 0, 0) ==
        doctest::Approx(std::sqrt(2.0) * g125 * g125).epsilon(1e-13));
  // 3D, l = 0, alpha = 1 reduces to 2(n+1).
  for (int n = 0; n <= 6; ++n) {
    CHECK(basis::eigenvalue({1.0, 3}, n, 0) ==
          doctest::Approx(2.0 * (n + 1)).epsilon(1e-12));
  }
}

TEST_CASE("eigenvalue positivity, minimum location and monotonicity") {
  // The spectrum is bounded below by the (n, l) = (0, 0) eigenvalue
  // 2^alpha Gamma(1 + a/2) Gamma((d+a)/2) / Gamma(d/2). (A bound of 2^alpha
  // itself does not hold: at alpha = 1, d = 2 the smallest eigenvalue is
  // pi/2 < 2, since Gamma(1 + a/2) < 1 on (0, 2).)
  for (double alpha : {0.3, 1.0, 1.9}) {
    for (int dim : {2, 3}) {
      const ProblemParams p{alpha, dim};
      const double floor = basis::eigenvalue(p, 0, 0);
      CHECK(floor > 0.0);
      for (int l = 0; l <= 20; ++l) {
        for (int n = 0; n <= 20; ++n) {
          const double d = basis::eigenvalue(p, n, l);
          CHECK(d >= floor * (1.0 - 1e-13));
          if (n > 0) CHECK(d > basis::eigenvalue(p, n - 1, l));
          if (l > 0) CHECK(d > basis::eigenvalue(p, n, l - 1));
        }
      }
    }
  }
  // At alpha = 1 in 3D the minimum is exactly 2^alpha.
  CHECK(basis::eigenvalue({1.0, 3}, 0, 0) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("basis_eval_P at simple points") {
  const ProblemParams p2{0.7, 2};
  CHECK(basis::basis_eval_P(p2, {0, 0, 0}, {0.3, 0.2, 0.0}) == 1.0);
  CHECK(basis::basis_eval_P(p2, {1, 0, 0}, {0.5, 0.0, 0.0}) ==
        doctest::Approx(0.5).epsilon(1e-14));
  const ProblemParams p3{0.7, 3};
  CHECK(basis::basis_eval_P(p3, {0, 0, 0}, {0.1, 0.1, 0.1}) ==
        doctest::Approx(1.0 / std::sqrt(4.0 * M_PI)).epsilon(1e-14));
  // radial degree-1 mode against jacobi_eval directly
  for (double r : {0.1, 0.45, 0.9}) {
    const double expected =
        special::jacobi_eval({0.35, 0.0, 1}, 2.0 * r * r - 1.0);
    CHECK(basis::basis_eval_P(p2, {0, 0, 1}, {r, 0.0, 0.0}) ==
          doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("basis_eval_p vanishes outside the ball and carries the weight") {
  const ProblemParams p{1.0, 2};
  CHECK(basis::basis_eval_p(p, {0, 0, 0}, {1.0, 0.0, 0.0}) == 0.0);
  CHECK(basis::basis_eval_p(p, {0, 0, 0}, {1.5, 0.0, 0.0}) == 0.0);
  CHECK(basis::basis_eval_p(p, {0, 0, 0}, {0.6, 0.0, 0.0}) ==
        doctest::Approx(0.8).epsilon(1e-14));
  // ratio p / P equals the weight inside
  const BasisIndex idx{2, 1, 3};
  const Vec3 x{0.4, -0.3, 0.0};
  const double w = std::pow(1.0 - (0.4 * 0.4 + 0.3 * 0.3), 0.5);
  CHECK(basis::basis_eval_p(p, idx, x) ==
        doctest::Approx(w * basis::basis_eval_P(p, idx, x)).epsilon(1e-14));
}

TEST_CASE("invalid indices are rejected") {
  const ProblemParams p2{1.0, 2};
  CHECK_THROWS_AS(basis::basis_eval_P(p2, {0, 1, 0}, {0.1, 0.1, 0.0}),
                  std::out_of_range);
  CHECK_THROWS_AS(basis::basis_eval_P(p2, {1, 2, 0}, {0.1, 0.1, 0.0}),
                  std::out_of_range);
  const ProblemParams p3{1.0, 3};
  CHECK_THROWS_AS(basis::basis_eval_P(p3, {1, 2, 0}, {0.1, 0.1, 0.1}),
                  std::out_of_range);
  const ProblemParams bad_alpha{2.0, 2};
  const ProblemParams bad_dim{1.0, 4};
  CHECK_THROWS_AS(bad_alpha.validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad_dim.validate(), std::invalid_argument);
}

TEST_CASE("norm_squared at elementary values") {
  CHECK(basis::norm_squared({1.0, 2}, 0, 0) ==
        doctest::Approx(2.0 * M_PI / 3.0).epsilon(1e-12));
  CHECK(basis::norm_squared({1.0, 2}, 1, 0) ==
        doctest::Approx(2.0 * M_PI / 15.0).epsilon(1e-12));
  CHECK(basis::norm_squared({1.0, 3}, 0, 0) ==
        doctest::Approx(M_PI / 16.0).epsilon(1e-12));
}

TEST_CASE("norm_squared agrees with the analytic normalization") {
  for (double alpha : {0.5, 1.0, 1.5}) {
    for (int dim : {2, 3}) {
      const ProblemParams p{alpha, dim};
      for (int l = 0; l <= 4; ++l) {
        for (int n = 0; n <= 4; ++n) {
          const double by_quad = basis::norm_squared(p, l, n);
          const double by_h = basis::norm_squared_analytic(p, l, n);
          CHECK(std::abs(by_quad - by_h) <= 1e-9 * by_h);
        }
      }
    }
  }
}

TEST_CASE("h_squared is 1 at l = n = 0") {
  CHECK(basis::h_squared({0.8, 2}, 0, 0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(basis::h_squared({1.2, 3}, 0, 0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("singular-integral constant at classical values") {
  // 1D half Laplacian: 1/pi. 2D, alpha=1: Gamma(3/2)/(pi |Gamma(-1/2)|) * 2.
  CHECK(basis::integral_constant(1.0, 1) ==
        doctest::Approx(1.0 / M_PI).epsilon(1e-13));
  CHECK(basis::integral_constant(1.0, 2) ==
        doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-13));
}
