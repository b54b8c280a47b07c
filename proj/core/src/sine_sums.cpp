#include "turan/sine_sums.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>

#include "compensated.hpp"

namespace turan {

namespace {

constexpr double kDirectFallbackSin = 1e-8;

// sin(j*x) with the rounding of the product j*x removed: the fma recovers
// the exact residual, which enters through the derivative term.
double sin_of_multiple(double j, double x) {
  const double hi = j * x;
  const double lo = std::fma(j, x, -hi);
  return std::sin(hi) + lo * std::cos(hi);
}

// Direct compensated evaluation; only used where the recurrence is
// ill-conditioned (x within ~1e-8 of a multiple of pi).
double sine_sum_direct(const CoeffVector& c, double x) {
  detail::CompensatedSum acc;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] != 0.0) acc.add(c[j] * sin_of_multiple(static_cast<double>(j) + 1.0, x));
  }
  return acc.value();
}

// The b recurrence runs in extended precision over the double-rounded
// cos(x), so the result matches a Chebyshev-side evaluation fed the same
// rounded point to well below 1e-9 even when the coefficients reach 1e7.
double clenshaw_sine(const CoeffVector& c, double x, double sin_x) {
  const long double two_cos = 2.0L * static_cast<long double>(std::cos(x));
  long double b1 = 0.0L;  // b_{k+1}
  long double b2 = 0.0L;  // b_{k+2}
  for (std::size_t k = c.size(); k-- > 0;) {
    const long double b = c[k] + two_cos * b1 - b2;
    b2 = b1;
    b1 = b;
  }
  return static_cast<double>(b1 * static_cast<long double>(sin_x));
}

void require_nonempty(const CoeffVector& c) {
  if (c.empty()) throw std::domain_error("sine_sum: coefficient vector must be nonempty");
}

// sin/cos of j*x advanced incrementally by the angle-addition step; one
// trig call per axis regardless of n.
struct AngleStepper {
  double s, c;        // sin(j x), cos(j x)
  double s1, c1;      // sin(x), cos(x)

  explicit AngleStepper(double x) : s(std::sin(x)), c(std::cos(x)), s1(s), c1(c) {}

  void advance() {
    const double ns = s * c1 + c * s1;
    const double nc = c * c1 - s * s1;
    s = ns;
    c = nc;
  }
};

double theta_sum_impl(const CoeffVector& c, double x, double y, bool odd_only) {
  require_nonempty(c);
  AngleStepper ax(x);
  AngleStepper ay(y);
  detail::CompensatedSum acc;
  const std::size_t n = c.size();
  for (std::size_t j = 1; j <= n; ++j) {
    if (!odd_only || (j % 2 == 1)) {
      acc.add(c[j - 1] * ax.s * ay.s / static_cast<double>(j));
    }
    if (j < n) {
      ax.advance();
      ay.advance();
    }
  }
  return acc.value();
}

}  // namespace

double sine_sum(const CoeffVector& c, double x) {
  require_nonempty(c);
  const double s = std::sin(x);
  if (std::abs(s) < kDirectFallbackSin) return sine_sum_direct(c, x);
  return clenshaw_sine(c, x, s);
}

double sine_sum_odd(const CoeffVector& c, double x) {
  require_nonempty(c);
  CoeffVector odd(c);
  for (std::size_t j = 2; j <= odd.size(); j += 2) odd[j - 1] = 0.0;
  return sine_sum(odd, x);
}

double theta_sum(const CoeffVector& c, double x, double y) {
  return theta_sum_impl(c, x, y, false);
}

double theta_sum_odd(const CoeffVector& c, double x, double y) {
  return theta_sum_impl(c, x, y, true);
}

double fejer_phi(int n, double x) {
  if (n < 1) throw std::domain_error("fejer_phi: n must be >= 1");
  detail::CompensatedSum acc;
  for (int j = 1; j < n; ++j) acc.add(2.0 * sin_of_multiple(j, x));
  acc.add(sin_of_multiple(n, x));
  return acc.value();
}

double fejer_phi_closed(int n, double x) {
  if (n < 1) throw std::domain_error("fejer_phi_closed: n must be >= 1");
  if (!(x > 0.0 && x < std::numbers::pi)) {
    throw std::domain_error("fejer_phi_closed: x must lie in (0, pi)");
  }
  const double half = 0.5 * x;
  return std::cos(half) * (1.0 - std::cos(n * x)) / std::sin(half);
}

double eval_S(const TuranParams& p, double x) {
  return sine_sum(turan_coeff_vector(p), x);
}

double eval_S_star(const TuranParams& p, double x) {
  return sine_sum_odd(turan_coeff_vector(p), x);
}

double eval_Theta(const TuranParams& p, double x, double y) {
  return theta_sum(turan_coeff_vector(p), x, y);
}

double eval_Theta_star(const TuranParams& p, double x, double y) {
  return theta_sum_odd(turan_coeff_vector(p), x, y);
}

double fejer_jackson_sum(int n, double x) {
  if (n < 1) throw std::domain_error("fejer_jackson_sum: n must be >= 1");
  detail::CompensatedSum acc;
  for (int j = 1; j <= n; ++j) acc.add(std::sin(j * x) / j);
  return acc.value();
}

double carslaw_sum(int n, double x) {
  if (n < 0) throw std::domain_error("carslaw_sum: n must be >= 0");
  detail::CompensatedSum acc;
  for (int j = 0; j <= n; ++j) {
    const int m = 2 * j + 1;
    acc.add(std::sin(m * x) / m);
  }
  return acc.value();
}

}  // namespace turan
