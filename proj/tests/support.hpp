// Shared test oracles, all deliberately independent of the library's
// production code paths.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

/// Direct Kahan-compensated sum of c_j sin(j x); the dual-path oracle for
/// the recurrence evaluator.
inline double ref_sine_sum(const std::vector<double>& c, double x) {
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t j = 1; j <= c.size(); ++j) {
    const double term = c[j - 1] * std::sin(static_cast<double>(j) * x) - comp;
    const double t = sum + term;
    comp = (t - sum) - term;
    sum = t;
  }
  return sum;
}

/// Exact integer binomial C(m, r) in 64-bit arithmetic. Every intermediate
/// value is itself a binomial coefficient, so the division is exact; callers
/// stay within C(50, 10)-sized inputs where nothing overflows.
inline std::uint64_t exact_binom(int m, int r) {
  if (r < 0 || r > m) return 0;
  if (r > m - r) r = m - r;
  std::uint64_t value = 1;
  for (int i = 1; i <= r; ++i) {
    value = value * static_cast<std::uint64_t>(m - r + i) / static_cast<std::uint64_t>(i);
  }
  return value;
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline std::vector<double> random_coeffs(std::mt19937_64& rng, int n, double lo = -1.0,
                                         double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> c(static_cast<std::size_t>(n));
  for (auto& v : c) v = dist(rng);
  return c;
}

inline double sum_abs(const std::vector<double>& c) {
  double s = 0.0;
  for (double v : c) s += std::abs(v);
  return s;
}

}  // namespace testsupport
