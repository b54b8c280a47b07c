#include <cmath>
#include <numbers>

#include "turan/chebyshev.hpp"
#include "turan/sine_sums.hpp"
#include "turan/verifier.hpp"

namespace turan {

namespace {

constexpr double kPi = std::numbers::pi;
const double kTwoThirdsPi = 2.0 * kPi / 3.0;

std::vector<int> range_n(int lo, int hi, int stride = 1) {
  std::vector<int> out;
  for (int n = lo; n <= hi; n += stride) out.push_back(n);
  return out;
}

const std::vector<double> kRealA{1.0, 1.5, 2.0, 5.0};
const std::vector<double> kIntegerA{1.0, 2.0, 3.0, 5.0};
const std::vector<double> kIntegerAFrom2{2.0, 3.0, 5.0};

SliceEvaluator::Clause at_least(std::function<double(double, double)> bound, bool strict = true) {
  return {BoundDirection::LhsAtLeast, strict, std::move(bound)};
}

SliceEvaluator::Clause at_most(std::function<double(double, double)> bound, bool strict = true) {
  return {BoundDirection::LhsAtMost, strict, std::move(bound)};
}

double zero_bound(double, double) { return 0.0; }

// Slice factories. Coefficient vectors are built once per (n, a) pair and
// shared by every grid point of the slice.

SliceEvaluator s_slice(int n, double a, SliceEvaluator::Clause clause) {
  SliceEvaluator se;
  CoeffVector c = turan_coeff_vector({n, a});
  se.lhs = [c = std::move(c)](double x, double) { return sine_sum(c, x); };
  se.clauses.push_back(std::move(clause));
  return se;
}

SliceEvaluator s_star_slice(int n, double a, SliceEvaluator::Clause clause) {
  SliceEvaluator se;
  CoeffVector c = turan_coeff_vector({n, a});
  for (std::size_t j = 2; j <= c.size(); j += 2) c[j - 1] = 0.0;
  se.lhs = [c = std::move(c)](double x, double) { return sine_sum(c, x); };
  se.clauses.push_back(std::move(clause));
  return se;
}

SliceEvaluator theta_slice(int n, double a, SliceEvaluator::Clause clause, bool odd_only) {
  SliceEvaluator se;
  CoeffVector c = turan_coeff_vector({n, a});
  if (odd_only) {
    se.lhs = [c = std::move(c)](double x, double y) { return theta_sum_odd(c, x, y); };
  } else {
    se.lhs = [c = std::move(c)](double x, double y) { return theta_sum(c, x, y); };
  }
  se.clauses.push_back(std::move(clause));
  return se;
}

double min_form_bound(double x, double) {
  return std::sin(x) * std::min(1.0, 2.0 * (1.0 + std::cos(x)));
}

double parabola_bound(double x, double) { return x * (kPi - x) / kPi; }

double sin_bound(double x, double) { return std::sin(x); }

double double_angle_bound(double x, double) {
  return 2.0 * std::sin(x) * (1.0 + std::cos(x));
}

double two_sin_bound(double x, double) { return 2.0 * std::sin(x); }

double product_sin_bound(double x, double y) { return std::sin(x) * std::sin(y); }

double two_product_sin_bound(double x, double y) { return 2.0 * std::sin(x) * std::sin(y); }

double coupled_product_bound(double x, double y) {
  return 2.0 * std::sin(x) * std::sin(y) * (1.0 + std::cos(x) * std::cos(y));
}

std::vector<InequalitySpec> build_registry() {
  std::vector<InequalitySpec> specs;

  auto add = [&specs](InequalitySpec spec) { specs.push_back(std::move(spec)); };

  // --- Positivity of the one- and two-variable families, integer parameter.

  add({.id = "eq1.1",
       .description = "one-variable family positive on (0, pi), integer parameter",
       .parity = ParityConstraint::AnyN,
       .two_dimensional = false,
       .has_parameter_a = true,
       .strict = true,
       .domain_lo = 0.0,
       .domain_hi = kPi,
       .known_equalities = {},
       .default_grid = {range_n(1, 31), kIntegerA, 1023, {}},
       .prepare = [](int n, double a) { return s_slice(n, a, at_least(zero_bound)); }});

  add({.id = "eq1.2",
       .description = "two-variable family positive on (0, pi)^2, integer parameter",
       .parity = ParityConstraint::AnyN,
       .two_dimensional = true,
       .has_parameter_a = true,
       .strict = true,
       .domain_lo = 0.0,
       .domain_hi = kPi,
       .known_equalities = {},
       .default_grid = {range_n(1, 15), kIntegerA, 255, 255},
       .prepare =
           [](int n, double a) { return theta_slice(n, a, at_least(zero_bound), false); }});

  add({.id = "eq1.3",
       .description = "one-variable family dominates the parabola x(pi-x)/pi for n, a >= 2",
       .parity = ParityConstraint::AnyN,
       .two_dimensional = false,
       .has_parameter_a = true,
       .strict = true,
       .domain_lo = 0.0,
       .domain_hi = kPi,
       .known_equalities = {},
       .default_grid = {range_n(2, 31), kIntegerAFrom2, 1023, {}},
       .prepare = [](int n, double a) { return s_slice(n, a, at_least(parabola_bound)); }});

  // --- Min-form lower bound. Stated strict, but equality is attained on the
  // branch-switch ranges, so those are registered as known equalities.

  add({.id = "eq3.5",
       .description = "one-variable family dominates sin(x) min{1, 2(1+cos x)}",
       .parity = ParityConstraint::AnyN,
       .two_dimensional = false,
       .has_parameter_a = true,
       .strict = false,
       .domain_lo = 0.0,
       .domain_hi = kPi,
       .known_equalities = {{1, {}, KnownEquality::Kind::XAtMost, kTwoThirdsPi},
                            {2, 1.0, KnownEquality::Kind::XAtLeast, kTwoThirdsPi},
                            {3, 1.0, KnownEquality::Kind::AtX, kTwoThirdsPi}},
       .default_grid = {range_n(1, 31), kRealA, 1025, {}},
       .prepare = [](int n, double a) { return s_slice(n, a, at_least(min_form_bound)); }});

  // --- Sharp lower bounds for odd/even n.

  add({.id = "thm3.1",
       .description = "odd-degree family dominates sin x",
       .parity = ParityConstraint::OddN,
       .two_dimensional = false,
       .has_parameter_a = true,
       .strict = false,
       .domain_lo = 0.0,
       .domain_hi = kPi,
       .known_equalities = {{1, {}, KnownEquality::Kind::AnyPoint, 0.0},
                            {3, 1.0, KnownEquality::Kind::AtX, kTwoThirdsPi}},
       .default_grid = {range_n(1, 31, 2), kRealA, 1025, {}},
       .prepare = [](int n, double a) { return s_slice(n, a, at_least(sin_bound)); }});

  add({.id = "thm3.2",
       .description = "even-degree family dominates 2 sin(x)(1 + cos x)",
       .parity = ParityConstraint::EvenN,
       .two_dimensional = false,
       .has_parameter_a = true,
       .strict = false,
       .domain_lo = 0.0,
       .domain_hi = kPi,
       .known_equalities = {{2, 1.0, KnownEquality::Kind::AnyPoint, 0.0},
                            {4, 1.0, KnownEquality::Kind::AtX, kPi / 2.0}},
       .default_grid = {range_n(2, 30, 2), kRealA, 1023, {}},
       .prepare = [](int n, double a) { return s_slice(n, a, at_least(double_angle_bound)); }});

  add({.id = "thm3.5",
       .description = "odd-index part dominates sin x for odd degree",
       .parity = ParityConstraint::OddN,
       .two_dimensional = false,
       .has_parameter_a = true,
       .strict = false,
       .domain_lo = 0.0,
       .domain_hi = kPi,
       .known_equalities = {{1, {}, KnownEquality::Kind::AnyPoint, 0.0}},
       .default_grid = {range_n(1, 31, 2), kRealA, 1023, {}},
       .prepare = [](int n, double a) { return s_star_slice(n, a, at_least(sin_bound)); }});

  add({.id = "thm3.6",
       .description = "odd-index part dominates 2 sin x for even degree",
       .parity = ParityConstraint::EvenN,
       .two_dimensional = false,
       .has_parameter_a = true,
       .strict = false,
       .domain_lo = 0.0,
       .domain_hi = kPi,
       .known_equalities = {{2, 1.0, KnownEquality::Kind::AnyPoint, 0.0},
                            {4, 1.0, KnownEquality::Kind::AtX, kPi / 2.0}},
       .default_grid = {range_n(2, 30, 2), kRealA, 1023, {}},
       .prepare = [](int n, double a) { return s_star_slice(n, a, at_least(two_sin_bound)); }});

  // --- Two-variable sharp bounds.

  add({.id = "thm3.7",
       .description = "two-variable family dominates sin(x) sin(y) for odd degree",
       .parity = ParityConstraint::OddN,
       .two_dimensional = true,
       .has_parameter_a = true,
       .strict = false,
       .domain_lo = 0.0,
       .domain_hi = kPi,
       .known_equalities = {{1, {}, KnownEquality::Kind::AnyPoint, 0.0}},
       .default_grid = {range_n(1, 15, 2), kRealA, 255, 255},
       .prepare =
           [](int n, double a) { return theta_slice(n, a, at_least(product_sin_bound), false); }});

  add({.id = "thm3.8",
       .description =
           "two-variable family dominates 2 sin(x) sin(y)(1 + cos x cos y) for even degree",
       .parity = ParityConstraint::EvenN,
       .two_dimensional = true,
       .has_parameter_a = true,
       .strict = false,
       .domain_lo = 0.0,
       .domain_hi = kPi,
       .known_equalities = {{2, 1.0, KnownEquality::Kind::AnyPoint, 0.0}},
       .default_grid = {range_n(2, 14, 2), kRealA, 255, 255},
       .prepare = [](int n, double a) {
         return theta_slice(n, a, at_least(coupled_product_bound), false);
       }});

  add({.id = "thm3.9-odd",
       .description = "odd-index two-variable part dominates sin(x) sin(y) for odd degree",
       .parity = ParityConstraint::OddN,
       .two_dimensional = true,
       .has_parameter_a = true,
       .strict = false,
       .domain_lo = 0.0,
       .domain_hi = kPi,
       .known_equalities = {{1, {}, KnownEquality::Kind::AnyPoint, 0.0}},
       .default_grid = {range_n(1, 15, 2), kRealA, 255, 255},
       .prepare =
           [](int n, double a) { return theta_slice(n, a, at_least(product_sin_bound), true); }});

  add({.id = "thm3.9-even",
       .description = "odd-index two-variable part dominates 2 sin(x) sin(y) for even degree",
       .parity = ParityConstraint::EvenN,
       .two_dimensional = true,
       .has_parameter_a = true,
       .strict = false,
       .domain_lo = 0.0,
       .domain_hi = kPi,
       .known_equalities = {{2, 1.0, KnownEquality::Kind::AnyPoint, 0.0}},
       .default_grid = {range_n(2, 14, 2), kRealA, 255, 255},
       .prepare = [](int n, double a) {
         return theta_slice(n, a, at_least(two_product_sin_bound), true);
       }});

  add({.id = "thm3.10",
       .description = "two-variable family positive on (0, pi)^2, real parameter >= 1",
       .parity = ParityConstraint::AnyN,
       .two_dimensional = true,
       .has_parameter_a = true,
       .strict = true,
       .domain_lo = 0.0,
       .domain_hi = kPi,
       .known_equalities = {},
       .default_grid = {range_n(1, 15), kRealA, 255, 255},
       .prepare =
           [](int n, double a) { return theta_slice(n, a, at_least(zero_bound), false); }});

  // --- Chebyshev expansions on (-1, 1).

  add({.id = "thm4.1",
       .description = "even-degree Chebyshev expansion bounded below by 1",
       .parity = ParityConstraint::EvenN,
       .two_dimensional = false,
       .has_parameter_a = true,
       .strict = false,
       .domain_lo = -1.0,
       .domain_hi = 1.0,
       .known_equalities = {{0, {}, KnownEquality::Kind::AnyPoint, 0.0},
                            {2, 1.0, KnownEquality::Kind::AtX, -0.5}},
       .default_grid = {range_n(0, 60, 2), kRealA, 1023, {}},
       .prepare = [](int n, double a) {
         SliceEvaluator se;
         se.lhs = [n, a](double x, double) { return eval_Lambda(n, a, x); };
         se.clauses.push_back(at_least([](double, double) { return 1.0; }, false));
         return se;
       }});

  add({.id = "thm4.2",
       .description = "odd-degree Chebyshev expansion bounded below by 2(1 + x)",
       .parity = ParityConstraint::OddN,
       .two_dimensional = false,
       .has_parameter_a = true,
       .strict = false,
       .domain_lo = -1.0,
       .domain_hi = 1.0,
       .known_equalities = {{1, 1.0, KnownEquality::Kind::AnyPoint, 0.0},
                            {3, 1.0, KnownEquality::Kind::AtX, 0.0}},
       .default_grid = {range_n(1, 61, 2), kRealA, 1023, {}},
       .prepare = [](int n, double a) {
         SliceEvaluator se;
         se.lhs = [n, a](double x, double) { return eval_Lambda(n, a, x); };
         se.clauses.push_back(at_least([](double x, double) { return 2.0 * (1.0 + x); }, false));
         return se;
       }});

  // --- Weighted Chebyshev integrals.

  add({.id = "thm4.3",
       .description = "even-degree weighted integral between arccos x and pi - arccos x on (0,1)",
       .parity = ParityConstraint::AnyN,
       .two_dimensional = false,
       .has_parameter_a = false,
       .strict = true,
       .domain_lo = 0.0,
       .domain_hi = 1.0,
       .known_equalities = {},
       .default_grid = {range_n(1, 40), {}, 1023, {}},
       .prepare = [](int n, double) {
         SliceEvaluator se;
         se.lhs = [n](double x, double) { return integral_U_weighted(n, x); };
         se.clauses.push_back(at_least([](double x, double) { return std::acos(x); }));
         se.clauses.push_back(at_most([](double x, double) { return kPi - std::acos(x); }));
         return se;
       }});

  add({.id = "thm4.3-reversed",
       .description = "the same integral bounds hold reversed on (-1, 0)",
       .parity = ParityConstraint::AnyN,
       .two_dimensional = false,
       .has_parameter_a = false,
       .strict = true,
       .domain_lo = -1.0,
       .domain_hi = 0.0,
       .known_equalities = {},
       .default_grid = {range_n(1, 40), {}, 1023, {}},
       .prepare = [](int n, double) {
         SliceEvaluator se;
         se.lhs = [n](double x, double) { return integral_U_weighted(n, x); };
         se.clauses.push_back(at_most([](double x, double) { return std::acos(x); }));
         se.clauses.push_back(at_least([](double x, double) { return kPi - std::acos(x); }));
         return se;
       }});

  add({.id = "thm4.5",
       .description = "weighted T(n+1)U(n) integral lies in (0, 1] on (-1, 1)",
       .parity = ParityConstraint::AnyN,
       .two_dimensional = false,
       .has_parameter_a = false,
       .strict = false,
       .domain_lo = -1.0,
       .domain_hi = 1.0,
       .known_equalities = {{0, {}, KnownEquality::Kind::AtX, 0.0}},
       .default_grid = {range_n(0, 40), {}, 1023, {}},
       .prepare = [](int n, double) {
         SliceEvaluator se;
         se.lhs = [n](double x, double) { return integral_TU_weighted(n, x); };
         se.clauses.push_back(at_least(zero_bound));
         se.clauses.push_back(at_most([](double, double) { return 1.0; }, false));
         return se;
       }});

  // --- Classical partial-sum bounds.

  add({.id = "eq4.3-lower",
       .description = "Fejer-Jackson partial sum positive on (0, pi)",
       .parity = ParityConstraint::AnyN,
       .two_dimensional = false,
       .has_parameter_a = false,
       .strict = true,
       .domain_lo = 0.0,
       .domain_hi = kPi,
       .known_equalities = {},
       .default_grid = {range_n(1, 31), {}, 1023, {}},
       .prepare = [](int n, double) {
         SliceEvaluator se;
         se.lhs = [n](double x, double) { return fejer_jackson_sum(n, x); };
         se.clauses.push_back(at_least(zero_bound));
         return se;
       }});

  add({.id = "eq4.3-upper",
       .description = "Fejer-Jackson partial sum below pi - x on (0, pi)",
       .parity = ParityConstraint::AnyN,
       .two_dimensional = false,
       .has_parameter_a = false,
       .strict = true,
       .domain_lo = 0.0,
       .domain_hi = kPi,
       .known_equalities = {},
       .default_grid = {range_n(1, 31), {}, 1023, {}},
       .prepare = [](int n, double) {
         SliceEvaluator se;
         se.lhs = [n](double x, double) { return fejer_jackson_sum(n, x); };
         se.clauses.push_back(at_most([](double x, double) { return kPi - x; }));
         return se;
       }});

  add({.id = "eq4.4",
       .description = "odd-harmonic partial sum lies in (0, 1] on (0, pi)",
       .parity = ParityConstraint::AnyN,
       .two_dimensional = false,
       .has_parameter_a = false,
       .strict = false,
       .domain_lo = 0.0,
       .domain_hi = kPi,
       .known_equalities = {{0, {}, KnownEquality::Kind::AtX, kPi / 2.0}},
       .default_grid = {range_n(0, 31), {}, 1023, {}},
       .prepare = [](int n, double) {
         SliceEvaluator se;
         se.lhs = [n](double x, double) { return carslaw_sum(n, x); };
         se.clauses.push_back(at_least(zero_bound));
         se.clauses.push_back(at_most([](double, double) { return 1.0; }, false));
         return se;
       }});

  return specs;
}

}  // namespace

const std::vector<InequalitySpec>& registry() {
  static const std::vector<InequalitySpec> specs = build_registry();
  return specs;
}

const InequalitySpec* find_spec(std::string_view id) {
  for (const auto& spec : registry()) {
    if (spec.id == id) return &spec;
  }
  return nullptr;
}

}  // namespace turan
