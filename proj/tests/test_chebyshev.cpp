#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "support.hpp"
#include "turan/chebyshev.hpp"
#include "turan/sine_sums.hpp"

using namespace turan;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("cheb_T pinned values") {
  for (double x : {-0.9, 0.0, 0.3, 1.0}) CHECK(cheb_T({1, x}) == x);
  CHECK(cheb_T({3, 0.5}) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(std::abs(cheb_T({10, std::cos(0.7)}) - std::cos(7.0)) <= 1e-12);
  CHECK(cheb_T({0, 0.42}) == 1.0);
  CHECK_THROWS_AS(cheb_T({-1, 0.5}), std::domain_error);
}

TEST_CASE("cheb_U pinned values") {
  for (double x : {-0.9, 0.0, 0.3, 1.0}) {
    CHECK(cheb_U({0, x}) == 1.0);
    CHECK(cheb_U({1, x}) == 2.0 * x);
  }
  CHECK_THROWS_AS(cheb_U({-1, 0.5}), std::domain_error);
}

TEST_CASE("trigonometric consistency of the recurrences") {
  for (int n : {1, 2, 5, 17, 100, 350, 500}) {
    for (int i = 1; i <= 101; ++i) {
      const double t = i * kPi / 102.0;
      const double x = std::cos(t);
      CHECK(std::abs(cheb_T({n, x}) - std::cos(n * t)) <= 1e-11);
      CHECK(std::abs(cheb_U({n, x}) * std::sin(t) - std::sin((n + 1) * t)) <= 1e-11);
    }
  }
}

TEST_CASE("eval_Lambda pinned values") {
  for (double a : {1.0, 2.7}) {
    for (double x : {-0.8, 0.0, 0.9}) CHECK(eval_Lambda(0, a, x) == 1.0);
  }
  CHECK(eval_Lambda(2, 1.0, -0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eval_Lambda(3, 1.0, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(eval_Lambda(-1, 1.0, 0.0), std::domain_error);
}

TEST_CASE("bridge identity to the sine sums") {
  for (int n : {0, 1, 2, 3, 5, 10, 20, 60}) {
    for (double a : {1.0, 2.0, 3.5}) {
      for (int i = 1; i <= 64; ++i) {
        const double t = i * kPi / 65.0;
        const double lhs = eval_Lambda(n, a, std::cos(t)) * std::sin(t);
        const double rhs = eval_S({n + 1, a}, t);
        CHECK(std::abs(lhs - rhs) <= 1e-9);
      }
    }
  }
}

TEST_CASE("integral_U_weighted pinned values") {
  for (int n : {1, 7, 25, 40}) {
    CHECK(std::abs(integral_U_weighted(n, 0.0) - kPi / 2.0) <= 1e-10);
  }
  CHECK(std::abs(integral_U_weighted(1, 0.5) - (kPi / 3.0 + std::sqrt(3.0) / 2.0)) <= 1e-12);
  CHECK_THROWS_AS(integral_U_weighted(3, 1.0), std::domain_error);
  CHECK_THROWS_AS(integral_U_weighted(3, -1.0), std::domain_error);
  CHECK_THROWS_AS(integral_U_weighted(3, 0.5, {3, QuadScheme::GaussLegendreOnTheta}),
                  std::domain_error);
}

TEST_CASE("integral_U_weighted reverses the bound order on the negative side") {
  const double v = integral_U_weighted(3, -0.4);
  const double z = std::acos(-0.4);
  CHECK(v > kPi - z);
  CHECK(v < z);
}

TEST_CASE("integral_TU_weighted pinned values") {
  auto rng = testsupport::make_rng(301);
  std::uniform_real_distribution<double> xs(-0.99, 0.99);
  for (int i = 0; i < 40; ++i) {
    const double x = xs(rng);
    CHECK(std::abs(integral_TU_weighted(0, x) - std::sqrt(1.0 - x * x)) <= 1e-12);
  }
  CHECK(std::abs(integral_TU_weighted(0, 0.0) - 1.0) <= 1e-12);
  const double v = integral_TU_weighted(4, 0.3);
  CHECK(v > 0.0);
  CHECK(v < 1.0);
  CHECK_THROWS_AS(integral_TU_weighted(4, 1.0), std::domain_error);
}

TEST_CASE("closed form and quadrature agree") {
  const QuadratureConfig closed{64, QuadScheme::ClosedForm};
  const QuadratureConfig quad{64, QuadScheme::GaussLegendreOnTheta};
  for (int n = 0; n <= 50; n += (n < 8 ? 1 : 7)) {
    for (int i = -19; i <= 19; ++i) {
      const double x = i * 0.05;
      if (n >= 1) {
        CHECK(std::abs(integral_U_weighted(n, x, closed) - integral_U_weighted(n, x, quad)) <=
              1e-8);
      }
      CHECK(std::abs(integral_TU_weighted(n, x, closed) - integral_TU_weighted(n, x, quad)) <=
            1e-8);
    }
  }
}

TEST_CASE("gauss_legendre rule sanity") {
  std::vector<double> nodes;
  std::vector<double> weights;
  gauss_legendre(8, nodes, weights);
  REQUIRE(nodes.size() == 8);
  REQUIRE(weights.size() == 8);
  double wsum = 0.0;
  for (double w : weights) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(nodes[i] == doctest::Approx(-nodes[7 - i]).epsilon(1e-14));
    CHECK(weights[i] == doctest::Approx(weights[7 - i]).epsilon(1e-14));
  }
  // An 8-node rule integrates monomials exactly through degree 15.
  for (int k = 0; k <= 15; ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < 8; ++i) acc += weights[i] * std::pow(nodes[i], k);
    const double expected = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
    CHECK(std::abs(acc - expected) <= 1e-13);
  }
}

TEST_CASE("odd_degree_sign_change finds both signs on the designated sides") {
  struct Probe {
    int n;
    GapSide side;
  };
  for (const Probe p : {Probe{3, GapSide::LowerGap}, Probe{7, GapSide::LowerGap},
                        Probe{1, GapSide::UpperGap}, Probe{5, GapSide::UpperGap}}) {
    const auto found = odd_degree_sign_change(p.n, p.side);
    REQUIRE(found.has_value());
    CHECK(found->x_negative > 0.0);
    CHECK(found->x_negative < 1.0);
    CHECK(found->x_positive > 0.0);
    CHECK(found->x_positive < 1.0);
    CHECK(found->value_negative < 0.0);
    CHECK(found->value_positive > 0.0);
  }
}

TEST_CASE("odd_degree_sign_change rejects even or nonpositive degrees") {
  CHECK_THROWS_AS(odd_degree_sign_change(2, GapSide::LowerGap), std::domain_error);
  CHECK_THROWS_AS(odd_degree_sign_change(0, GapSide::UpperGap), std::domain_error);
  CHECK_THROWS_AS(odd_degree_sign_change(-3, GapSide::LowerGap), std::domain_error);
}
