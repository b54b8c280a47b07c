#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "support.hpp"
#include "turan/kernel.hpp"
#include "turan/sine_sums.hpp"

using namespace turan;

namespace {
constexpr double kPi = std::numbers::pi;
const double kTwoThirdsPi = 2.0 * kPi / 3.0;
}  // namespace

TEST_CASE("sine_sum pinned values") {
  CHECK(sine_sum({1.0}, kPi / 3) == doctest::Approx(std::sin(kPi / 3)).epsilon(1e-15));
  CHECK(std::abs(sine_sum({3.0, 2.0, 1.0}, kTwoThirdsPi) - std::sqrt(3.0) / 2.0) <= 1e-12);
  CHECK_THROWS_AS(sine_sum({}, 1.0), std::domain_error);
}

TEST_CASE("sine_sum dual-path agreement, random coefficients") {
  auto rng = testsupport::make_rng(71);
  std::uniform_int_distribution<int> ns(1, 2000);
  std::uniform_real_distribution<double> xs(1e-6, kPi - 1e-6);
  for (int i = 0; i < 950; ++i) {
    const int n = ns(rng);
    const CoeffVector c = testsupport::random_coeffs(rng, n);
    const double x = xs(rng);
    const double tol = 1e-11 * (1.0 + testsupport::sum_abs(c));
    CHECK(std::abs(sine_sum(c, x) - testsupport::ref_sine_sum(c, x)) <= tol);
  }
  std::uniform_int_distribution<int> big_ns(10'000, 100'000);
  for (int i = 0; i < 20; ++i) {
    const int n = big_ns(rng);
    const CoeffVector c = testsupport::random_coeffs(rng, n);
    const double x = xs(rng);
    const double tol = 1e-11 * (1.0 + testsupport::sum_abs(c));
    CHECK(std::abs(sine_sum(c, x) - testsupport::ref_sine_sum(c, x)) <= tol);
  }
}

TEST_CASE("sine_sum near the fallback boundary and at multiples of pi") {
  auto rng = testsupport::make_rng(72);
  const CoeffVector c = testsupport::random_coeffs(rng, 257);
  const double tol = 1e-11 * (1.0 + testsupport::sum_abs(c));
  for (double x : {0.0, 1e-12, 1e-9, 5e-9, 2e-8, kPi - 2e-8, kPi - 1e-9, kPi, -1e-9, -kPi}) {
    CHECK(std::abs(sine_sum(c, x) - testsupport::ref_sine_sum(c, x)) <= tol);
  }
}

TEST_CASE("sine_sum_odd skips even indices") {
  auto rng = testsupport::make_rng(73);
  const CoeffVector c = testsupport::random_coeffs(rng, 40);
  CoeffVector odd_only = c;
  for (std::size_t j = 2; j <= odd_only.size(); j += 2) odd_only[j - 1] = 0.0;
  for (double x : {0.3, 1.1, 2.9}) {
    CHECK(sine_sum_odd(c, x) ==
          doctest::Approx(testsupport::ref_sine_sum(odd_only, x)).epsilon(1e-13));
  }
}

TEST_CASE("fejer_phi pinned values") {
  CHECK(std::abs(fejer_phi(3, kTwoThirdsPi)) <= 1e-12);
  CHECK(std::abs(fejer_phi(5, kTwoThirdsPi) - std::sqrt(3.0) / 2.0) <= 1e-12);
  CHECK(std::abs(fejer_phi(6, kPi / 2) - 2.0) <= 1e-12);
  for (double x : {0.1, 1.0, 3.0}) CHECK(fejer_phi(1, x) == std::sin(x));
}

TEST_CASE("fejer_phi_closed pinned values and domain guard") {
  CHECK(std::abs(fejer_phi_closed(4, kPi / 2)) <= 1e-12);
  CHECK(std::abs(fejer_phi_closed(2, kPi / 2) - 2.0) <= 1e-12);
  CHECK(std::abs(fejer_phi_closed(3, kTwoThirdsPi)) <= 1e-12);
  CHECK_THROWS_AS(fejer_phi_closed(3, 0.0), std::domain_error);
  CHECK_THROWS_AS(fejer_phi_closed(3, kPi), std::domain_error);
  CHECK_THROWS_AS(fejer_phi_closed(3, -0.5), std::domain_error);
  CHECK_THROWS_AS(fejer_phi_closed(3, 3.2), std::domain_error);
  CHECK_THROWS_AS(fejer_phi_closed(0, 1.0), std::domain_error);
}

TEST_CASE("fejer_phi agrees with the closed form") {
  for (int n : {1, 2, 3, 7, 20, 100, 500, 10'000}) {
    for (int i = 1; i <= 256; ++i) {
      const double x = i * kPi / 257.0;
      CHECK(std::abs(fejer_phi(n, x) - fejer_phi_closed(n, x)) <= 1e-10);
    }
  }
}

TEST_CASE("fejer_phi_closed nonnegative, strictly positive for n in {1,2}") {
  for (int n : {1, 2, 3, 4, 9, 64}) {
    for (int i = 1; i <= 512; ++i) {
      const double x = i * kPi / 513.0;
      const double v = fejer_phi_closed(n, x);
      CHECK(v >= 0.0);
      if (n <= 2) CHECK(v > 0.0);
    }
  }
}

TEST_CASE("eval_S closed form at n=2 and pinned points") {
  auto rng = testsupport::make_rng(74);
  std::uniform_real_distribution<double> xs(1e-3, kPi - 1e-3);
  for (double a : {1.0, 0.7, 2.3}) {
    for (int i = 0; i < 25; ++i) {
      const double x = xs(rng);
      const double closed = (1.0 + a) * std::sin(x) + std::sin(2.0 * x);
      CHECK(std::abs(eval_S({2, a}, x) - closed) <= 1e-12);
    }
  }
  CHECK(eval_S({2, 1.0}, kPi / 2) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(eval_S({3, 1.0}, kTwoThirdsPi) - std::sqrt(3.0) / 2.0) <= 1e-12);
  const double counterexample = eval_S({2, 0.9}, 3.0);
  CHECK(counterexample < 0.0);
  CHECK(std::abs(counterexample - (1.9 * std::sin(3.0) + std::sin(6.0))) <= 1e-12);
  CHECK(counterexample == doctest::Approx(-0.0113).epsilon(0.01));
}

TEST_CASE("eval_S_star pinned values and reflection identity") {
  auto rng = testsupport::make_rng(75);
  std::uniform_real_distribution<double> xs(1e-3, kPi - 1e-3);
  for (int i = 0; i < 10; ++i) {
    const double x = xs(rng);
    CHECK(std::abs(eval_S_star({1, 4.2}, x) - std::sin(x)) <= 1e-14);
    CHECK(std::abs(eval_S_star({2, 1.0}, x) - 2.0 * std::sin(x)) <= 1e-13);
  }
  CHECK(std::abs(eval_S_star({4, 1.0}, kPi / 2) - 2.0) <= 1e-13);
  for (int n = 1; n <= 30; ++n) {
    for (double a : {1.0, 1.5, 2.5}) {
      for (int i = 0; i < 50; ++i) {
        const double x = xs(rng);
        const double lhs = 2.0 * eval_S_star({n, a}, x);
        const double rhs = eval_S({n, a}, x) + eval_S({n, a}, kPi - x);
        CHECK(std::abs(lhs - rhs) <= 1e-10);
      }
    }
  }
}

TEST_CASE("eval_Theta closed form at n=2, pinned spot values") {
  auto rng = testsupport::make_rng(76);
  std::uniform_real_distribution<double> xs(1e-3, kPi - 1e-3);
  for (double a : {1.0, 0.5, 3.0}) {
    for (int i = 0; i < 25; ++i) {
      const double x = xs(rng);
      const double y = xs(rng);
      const double closed =
          2.0 * std::sin(x) * std::sin(y) * ((a + 1.0) / 2.0 + std::cos(x) * std::cos(y));
      CHECK(std::abs(eval_Theta({2, a}, x, y) - closed) <= 1e-12);
    }
  }
  CHECK(eval_Theta({2, 1.0}, kPi / 2, kPi / 2) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(eval_Theta({1, 9.9}, kPi / 3, kPi / 3) - 0.75) <= 1e-15);
}

TEST_CASE("eval_Theta symmetric in its two angles") {
  auto rng = testsupport::make_rng(77);
  std::uniform_real_distribution<double> xs(1e-3, kPi - 1e-3);
  for (int i = 0; i < 100; ++i) {
    const double x = xs(rng);
    const double y = xs(rng);
    CHECK(std::abs(eval_Theta({3, 1.0}, x, y) - eval_Theta({3, 1.0}, y, x)) <= 1e-13);
    CHECK(std::abs(eval_Theta({8, 2.5}, x, y) - eval_Theta({8, 2.5}, y, x)) <= 1e-13);
  }
}

TEST_CASE("eval_Theta_star pinned forms and direct oracle") {
  auto rng = testsupport::make_rng(78);
  std::uniform_real_distribution<double> xs(1e-3, kPi - 1e-3);
  for (int i = 0; i < 10; ++i) {
    const double x = xs(rng);
    const double y = xs(rng);
    CHECK(std::abs(eval_Theta_star({1, 0.3}, x, y) - std::sin(x) * std::sin(y)) <= 1e-14);
    CHECK(std::abs(eval_Theta_star({2, 1.0}, x, y) - 2.0 * std::sin(x) * std::sin(y)) <= 1e-13);
  }
  const CoeffVector c = turan_coeff_vector({5, 2.0});
  auto direct_odd = [&](double x, double y) {
    double s = 0.0;
    for (std::size_t j = 1; j <= c.size(); j += 2) {
      s += c[j - 1] * std::sin(j * x) * std::sin(j * y) / static_cast<double>(j);
    }
    return s;
  };
  const double x = kPi / 2;
  CHECK(std::abs(eval_Theta_star({5, 2.0}, x, x) - direct_odd(x, x)) <= 1e-13);
  for (int i = 0; i < 20; ++i) {
    const double xr = xs(rng);
    const double yr = xs(rng);
    CHECK(std::abs(eval_Theta_star({5, 2.0}, xr, yr) - direct_odd(xr, yr)) <= 1e-13);
  }
}

TEST_CASE("product-to-sum identity links the two-angle weights to S") {
  auto rng = testsupport::make_rng(79);
  std::uniform_real_distribution<double> xs(1e-3, kPi - 1e-3);
  for (int n : {1, 2, 3, 5, 9, 14, 20}) {
    for (double a : {1.0, 2.5}) {
      const CoeffVector c = turan_coeff_vector({n, a});
      for (int i = 0; i < 20; ++i) {
        const double x = xs(rng);
        const double y = xs(rng);
        double lhs = 0.0;
        for (std::size_t j = 1; j <= c.size(); ++j) {
          lhs += c[j - 1] * std::sin(j * x) * std::cos(j * y);
        }
        const double rhs = 0.5 * (eval_S({n, a}, x - y) + eval_S({n, a}, x + y));
        CHECK(std::abs(lhs - rhs) <= 1e-10);
      }
    }
  }
}

TEST_CASE("fejer_jackson_sum pinned values and bounds") {
  CHECK(fejer_jackson_sum(1, kPi / 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fejer_jackson_sum(2, kPi / 2) == doctest::Approx(1.0).epsilon(1e-14));
  const double v = fejer_jackson_sum(50, 0.1);
  CHECK(v > 0.0);
  CHECK(v < kPi - 0.1);
  CHECK_THROWS_AS(fejer_jackson_sum(0, 1.0), std::domain_error);
}

TEST_CASE("carslaw_sum pinned values and bounds") {
  CHECK(std::abs(carslaw_sum(0, kPi / 2) - 1.0) <= 1e-15);
  CHECK(std::abs(carslaw_sum(0, kPi / 6) - 0.5) <= 1e-15);
  const double v = carslaw_sum(20, 1.0);
  CHECK(v > 0.0);
  CHECK(v <= 1.0);
  CHECK_THROWS_AS(carslaw_sum(-1, 1.0), std::domain_error);
}
