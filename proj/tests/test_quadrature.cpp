#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fraclap/experiments.hpp"
#include "fraclap/quadrature.hpp"
#include "fraclap/special.hpp"

using namespace fraclap;
using experiments::beta_moment;

TEST_CASE("radial rule integrates constants and even monomials (alpha = 1)") {
  const auto rule = quad::build_radial_rule(1.0, 4);
  CHECK(quad::integrate_radial(rule, [](double) { return 1.0; }) ==
        doctest::Approx(M_PI / 4.0).epsilon(1e-12));
  CHECK(quad::integrate_radial(rule, [](double r) { return r * r; }) ==
        doctest::Approx(M_PI / 16.0).epsilon(1e-12));
}

TEST_CASE("radial rule against the Beta oracle at alpha = 0.5") {
  const auto rule = quad::build_radial_rule(0.5, 6);
  const double expected = beta_moment(0.5, 4);  // (1/2) B(5/2, 5/4)
  CHECK(quad::integrate_radial(rule, [](double r) { return std::pow(r, 4); }) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("one-point rule hits the first moment ratio") {
  const auto rule = quad::build_radial_rule(1.0, 1);
  REQUIRE(rule.size() == 1);
  CHECK(rule.nodes[0] == doctest::Approx(4.0 / (3.0 * M_PI)).epsilon(1e-11));
  CHECK(rule.weights[0] == doctest::Approx(M_PI / 4.0).epsilon(1e-11));
}

TEST_CASE("integrate_radial of zero is zero") {
  const auto rule = quad::build_radial_rule(1.3, 5);
  CHECK(quad::integrate_radial(rule, [](double) { return 0.0; }) == 0.0);
}

TEST_CASE("moment exactness across alpha and rule size") {
  for (double alpha : {0.3, 0.5, 1.0, 1.5, 1.9}) {
    for (int k : {2, 4, 8, 16}) {
      const auto rule = quad::build_radial_rule(alpha, k);
      for (int deg = 0; deg <= 2 * k - 1; ++deg) {
        double moment = 0.0;
        for (int i = 0; i < k; ++i) {
          moment += std::pow(rule.nodes[i], deg) * rule.weights[i];
        }
        const double oracle = beta_moment(alpha, deg);
        CHECK(std::abs(moment - oracle) <= 1e-10 * oracle);
      }
    }
  }
}

TEST_CASE("nodes stay inside (0,1), weights positive, total mass correct") {
  for (double alpha : {0.3, 1.0, 1.9}) {
    const auto rule = quad::build_radial_rule(alpha, 12);
    double mass = 0.0;
    for (int i = 0; i < rule.size(); ++i) {
      CHECK(rule.nodes[i] > 0.0);
      CHECK(rule.nodes[i] < 1.0);
      if (i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
      CHECK(rule.weights[i] > 0.0);
      mass += rule.weights[i];
    }
    CHECK(std::abs(mass - beta_moment(alpha, 0)) <= 1e-10);
  }
}

TEST_CASE("k and k+1 node rules agree on shared polynomial range") {
  for (int k : {3, 7}) {
    const auto ra = quad::build_radial_rule(0.8, k);
    const auto rb = quad::build_radial_rule(0.8, k + 1);
    for (int deg = 0; deg <= 2 * k - 1; ++deg) {
      auto f = [deg](double r) { return std::pow(r, deg); };
      CHECK(std::abs(quad::integrate_radial(ra, f) -
                     quad::integrate_radial(rb, f)) <= 1e-12);
    }
  }
}

TEST_CASE("orthogonality integrand vanishes") {
  // P_1^{(1/2,0)}(2r^2-1) * P_0 * r against the alpha = 1 weight.
  const auto rule = quad::build_radial_rule(1.0, 4);
  auto f = [](double r) {
    return special::jacobi_eval({0.5, 0.0, 1}, 2.0 * r * r - 1.0) * r;
  };
  CHECK(std::abs(quad::integrate_radial(rule, f)) <= 1e-12);
}

TEST_CASE("angular trapezoid rule") {
  const auto rule =
      quad::build_angular_rule(quad::AngularKind::TrapezoidPeriodic, 8);
  double c3 = 0.0, total = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    c3 += std::cos(3.0 * rule.nodes[i]) * rule.weights[i];
    total += rule.weights[i];
  }
  CHECK(std::abs(c3) <= 1e-14);
  CHECK(total == doctest::Approx(2.0 * M_PI).epsilon(1e-14));
}

TEST_CASE("angular Gauss-Legendre rule") {
  const auto rule =
      quad::build_angular_rule(quad::AngularKind::GaussLegendreMu, 3);
  double m4 = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    m4 += std::pow(rule.nodes[i], 4) * rule.weights[i];
  }
  CHECK(m4 == doctest::Approx(2.0 / 5.0).epsilon(1e-13));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(quad::build_radial_rule(0.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(quad::build_radial_rule(2.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(quad::build_radial_rule(1.0, 0), std::invalid_argument);
  // rule size not small against the seed grid
  CHECK_THROWS_AS(quad::build_radial_rule(1.0, 8, 64), std::invalid_argument);
  CHECK_THROWS_AS(quad::build_angular_rule(quad::AngularKind::TrapezoidPeriodic, 0),
                  std::invalid_argument);
}
