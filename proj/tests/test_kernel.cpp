#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "support.hpp"
#include "turan/kernel.hpp"
#include "turan/sine_sums.hpp"

using turan::sigma_imag_oracle;
using turan::turan_coeff;
using turan::turan_coeff_vector;
using turan::TuranParams;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("turan_coeff pinned values") {
  CHECK(turan_coeff({5, 1.7}, 5) == 1.0);
  CHECK(turan_coeff({3, 1.0}, 1) == 3.0);
  CHECK(turan_coeff({3, 1.0}, 2) == 2.0);
  CHECK(turan_coeff({3, 1.0}, 3) == 1.0);
  CHECK(turan_coeff({3, 0.0}, 1) == 1.0);
  CHECK(turan_coeff({3, 0.0}, 2) == 1.0);
  CHECK(turan_coeff({3, 2.0}, 1) == 6.0);
}

TEST_CASE("turan_coeff domain errors") {
  CHECK_THROWS_AS(turan_coeff({3, 1.0}, 0), std::domain_error);
  CHECK_THROWS_AS(turan_coeff({3, 1.0}, 4), std::domain_error);
  CHECK_THROWS_AS(turan_coeff({0, 1.0}, 1), std::domain_error);
  CHECK_THROWS_AS(turan_coeff({-2, 1.0}, 1), std::domain_error);
  CHECK_THROWS_AS(turan_coeff({3, std::nan("")}, 1), std::domain_error);
  CHECK_THROWS_AS(turan_coeff({3, INFINITY}, 1), std::domain_error);
  CHECK_THROWS_AS(turan_coeff_vector({0, 1.0}), std::domain_error);
}

TEST_CASE("turan_coeff_vector pinned values") {
  CHECK(turan_coeff_vector({3, 1.0}) == turan::CoeffVector{3.0, 2.0, 1.0});
  CHECK(turan_coeff_vector({4, 1.0}) == turan::CoeffVector{4.0, 3.0, 2.0, 1.0});
  CHECK(turan_coeff_vector({1, -7.3}) == turan::CoeffVector{1.0});
}

TEST_CASE("integer parameter matches exact integer binomials") {
  for (int n = 1; n <= 40; ++n) {
    for (int k = 0; k <= 10; ++k) {
      const TuranParams p{n, static_cast<double>(k)};
      const turan::CoeffVector c = turan_coeff_vector(p);
      for (int j = 1; j <= n; ++j) {
        const double expected =
            static_cast<double>(testsupport::exact_binom(n + k - j, n - j));
        CHECK(turan_coeff(p, j) == expected);
        CHECK(c[static_cast<std::size_t>(j - 1)] == expected);
      }
    }
  }
}

TEST_CASE("product recurrence across adjacent indices") {
  for (double a : {0.5, 1.0, 1.7, 3.0}) {
    for (int n : {2, 3, 5, 17, 60, 200}) {
      const TuranParams p{n, a};
      for (int j = 2; j <= n; ++j) {
        const int m = n - j + 1;
        const double lhs = turan_coeff(p, j - 1);
        const double rhs = turan_coeff(p, j) * (a + m) / m;
        CHECK(std::abs(lhs - rhs) <= 4.0 * std::abs(lhs) * 0x1p-52);
      }
    }
  }
}

TEST_CASE("vector agrees with per-index product") {
  for (double a : {0.5, 1.0, 1.7, 3.0}) {
    for (int n : {1, 2, 7, 33, 200}) {
      const TuranParams p{n, a};
      const turan::CoeffVector c = turan_coeff_vector(p);
      REQUIRE(c.size() == static_cast<std::size_t>(n));
      for (int j = 1; j <= n; ++j) {
        const double direct = turan_coeff(p, j);
        CHECK(std::abs(c[static_cast<std::size_t>(j - 1)] - direct) <=
              4.0 * std::abs(direct) * 0x1p-52);
      }
    }
  }
}

TEST_CASE("coefficients at least one for nonnegative a") {
  for (double a : {0.0, 0.3, 1.0, 2.5}) {
    for (int n : {1, 4, 13, 50}) {
      for (double v : turan_coeff_vector({n, a})) CHECK(v >= 1.0);
    }
  }
}

TEST_CASE("sigma oracle pinned values") {
  CHECK(sigma_imag_oracle(2, 0, kPi / 2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sigma_imag_oracle(0, 5, 1.234) == 0.0);
}

TEST_CASE("sigma oracle equals the degree-3 integer-parameter sum") {
  auto rng = testsupport::make_rng(2026081301);
  std::uniform_real_distribution<double> xs(1e-3, kPi - 1e-3);
  for (int i = 0; i < 50; ++i) {
    const double x = xs(rng);
    CHECK(std::abs(sigma_imag_oracle(3, 1, x) - turan::eval_S({3, 1.0}, x)) <= 1e-12);
  }
}

TEST_CASE("sigma oracle agrees with the coefficient sum across n and k") {
  for (int n : {1, 5, 20, 50, 100}) {
    for (int k = 0; k <= 5; ++k) {
      turan::CoeffVector c;
      if (k == 0) {
        c.assign(static_cast<std::size_t>(n), 1.0);
      } else {
        c = turan_coeff_vector({n, static_cast<double>(k)});
      }
      const double scale = 1.0 + testsupport::sum_abs(c);
      for (double x : {0.31, 1.0, kPi / 2, 2.5, 3.0}) {
        const double oracle = sigma_imag_oracle(n, k, x);
        const double direct = testsupport::ref_sine_sum(c, x);
        CHECK(std::abs(oracle - direct) <= 1e-10 * scale);
      }
    }
  }
}

TEST_CASE("sigma oracle work guard") {
  CHECK_THROWS_AS(sigma_imag_oracle(2'000'001, 5, 1.0), std::length_error);
  CHECK_THROWS_AS(sigma_imag_oracle(10'000'001, 1, 1.0), std::length_error);
}
