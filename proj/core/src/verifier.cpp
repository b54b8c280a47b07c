#include "turan/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "turan/sine_sums.hpp"

namespace turan {

namespace {

bool parity_keeps(ParityConstraint parity, int n) {
  switch (parity) {
    case ParityConstraint::OddN:
      return n % 2 != 0;
    case ParityConstraint::EvenN:
      return n % 2 == 0;
    case ParityConstraint::AnyN:
      return true;
  }
  return true;
}

struct ItemResult {
  double min_margin = std::numeric_limits<double>::infinity();
  GridPointRecord argmin;
  std::vector<GridPointRecord> violations;
  std::vector<EqualityHit> equality_hits;
};

void record_point(ItemResult& r, int n, double a, double x, double y, double lhs, double bound,
                  double margin) {
  if (margin < r.min_margin) {
    r.min_margin = margin;
    r.argmin = {n, a, x, y, lhs, bound, margin};
  }
  if (margin < -kViolationTol) {
    r.violations.push_back({n, a, x, y, lhs, bound, margin});
  } else if (std::abs(margin) <= kEqualityTol) {
    r.equality_hits.push_back({n, a, x, y, margin});
  }
}

ItemResult scan_item(const InequalitySpec& spec, int n, double a, int x_steps, int y_steps) {
  ItemResult res;
  const SliceEvaluator se = spec.prepare(n, a);
  const double step = (spec.domain_hi - spec.domain_lo) / (x_steps + 1);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  auto eval_point = [&](double x, double y) {
    const double lhs = se.lhs(x, y);
    double margin = std::numeric_limits<double>::infinity();
    double binding = nan;
    for (const auto& clause : se.clauses) {
      const double b = clause.bound(x, y);
      const double m = clause.direction == BoundDirection::LhsAtLeast ? lhs - b : b - lhs;
      if (m < margin) {
        margin = m;
        binding = b;
      }
    }
    record_point(res, n, a, x, y, lhs, binding, margin);
  };
  if (spec.two_dimensional) {
    const double ystep = (spec.domain_hi - spec.domain_lo) / (y_steps + 1);
    for (int i = 1; i <= x_steps; ++i) {
      const double x = spec.domain_lo + i * step;
      // Symmetric surfaces: the y > x half duplicates margins, skip it.
      for (int j = 1; j <= i; ++j) {
        eval_point(x, spec.domain_lo + j * ystep);
      }
    }
  } else {
    for (int i = 1; i <= x_steps; ++i) {
      eval_point(spec.domain_lo + i * step, nan);
    }
  }
  return res;
}

}  // namespace

int scan_thread_limit() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("TURAN_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<int>(v);
  }
  return static_cast<int>(hw);
}

ScanReport scan_inequality(const InequalitySpec& spec, const ScanGrid& grid) {
  const auto t0 = std::chrono::steady_clock::now();
  if (grid.x_steps < 1) throw std::domain_error("scan_inequality: x_steps must be >= 1");

  std::vector<int> ns;
  for (int n : grid.n_values) {
    if (parity_keeps(spec.parity, n)) ns.push_back(n);
  }
  if (ns.empty()) throw std::domain_error("scan_inequality: no n values match the spec parity");

  std::vector<double> as;
  if (spec.has_parameter_a) {
    if (grid.a_values.empty()) throw std::domain_error("scan_inequality: a grid is empty");
    as = grid.a_values;
  } else {
    as = {std::numeric_limits<double>::quiet_NaN()};
  }

  const int y_steps = spec.two_dimensional ? grid.y_steps.value_or(grid.x_steps) : 0;
  if (spec.two_dimensional && y_steps < 1) {
    throw std::domain_error("scan_inequality: y_steps must be >= 1");
  }

  struct Item {
    int n;
    double a;
  };
  std::vector<Item> items;
  items.reserve(ns.size() * as.size());
  for (int n : ns) {
    for (double a : as) items.push_back({n, a});
  }

  std::vector<ItemResult> results(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= items.size()) return;
      results[idx] = scan_item(spec, items[idx].n, items[idx].a, grid.x_steps, y_steps);
    }
  };
  const int nthreads =
      std::min<int>(scan_thread_limit(), static_cast<int>(items.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ScanReport report;
  report.spec_id = spec.id;
  report.grid = grid;
  report.grid.n_values = ns;
  report.grid.a_values = spec.has_parameter_a ? grid.a_values : std::vector<double>{};
  if (spec.two_dimensional) report.grid.y_steps = y_steps;
  report.domain_lo = spec.domain_lo;
  report.domain_hi = spec.domain_hi;
  report.two_dimensional = spec.two_dimensional;
  report.has_parameter_a = spec.has_parameter_a;
  report.min_margin = std::numeric_limits<double>::infinity();
  // Deterministic merge: item order is the (n, a) construction order, so
  // the report does not depend on worker scheduling.
  for (const auto& r : results) {
    if (r.min_margin < report.min_margin) {
      report.min_margin = r.min_margin;
      report.argmin = r.argmin;
    }
    report.violations.insert(report.violations.end(), r.violations.begin(), r.violations.end());
    report.equality_hits.insert(report.equality_hits.end(), r.equality_hits.begin(),
                                r.equality_hits.end());
  }
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::optional<SharpnessCounterexampleS> sharpness_probe_S(double a) {
  if (!(a < 1.0)) throw std::domain_error("sharpness_probe_S: requires a < 1");
  constexpr double kNegative = -1e-12;
  // Coarse-to-fine approach to pi: the first violation appears once
  // pi - x < arccos((1+a)/2), so halving epsilons find it quickly.
  for (int n = 2; n <= 8; ++n) {
    const CoeffVector c = turan_coeff_vector({n, a});
    for (double eps = 0.8; eps > 1e-12; eps *= 0.5) {
      const double x = std::numbers::pi - eps;
      const double value = sine_sum(c, x);
      if (value <= kNegative) return SharpnessCounterexampleS{n, x, value};
    }
  }
  return std::nullopt;
}

std::optional<SharpnessCounterexampleTheta> sharpness_probe_Theta(double a) {
  if (!(a < 1.0)) throw std::domain_error("sharpness_probe_Theta: requires a < 1");
  constexpr double kNegative = -1e-12;
  const CoeffVector c = turan_coeff_vector({2, a});
  for (double ey = 0.1; ey > 5e-4; ey *= 0.5) {
    const double y = std::numbers::pi - ey;
    for (double x = 0.1; x > 5e-4; x *= 0.5) {
      const double value = theta_sum(c, x, y);
      if (value <= kNegative) return SharpnessCounterexampleTheta{2, x, y, value};
    }
  }
  return std::nullopt;
}

double crossing_point_remark33() {
  auto g = [](double x) {
    const double parabola = x * (std::numbers::pi - x) / std::numbers::pi;
    const double cap = std::min(1.0, 2.0 * (1.0 + std::cos(x)));
    return parabola - std::sin(x) * cap;
  };
  double lo = 1.5, hi = 2.8;
  if (!(g(lo) < 0.0) || !(g(hi) > 0.0)) {
    throw std::runtime_error("crossing_point_remark33: bracket does not straddle a sign change");
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

EqualityAudit audit_equality_hits(const InequalitySpec& spec, const ScanGrid& grid,
                                  const ScanReport& report) {
  EqualityAudit audit;
  const double step = (spec.domain_hi - spec.domain_lo) / (grid.x_steps + 1);

  auto matches = [&](const KnownEquality& k, const EqualityHit& hit) {
    if (k.n && *k.n != hit.n) return false;
    if (k.a && spec.has_parameter_a && *k.a != hit.a) return false;
    switch (k.kind) {
      case KnownEquality::Kind::AnyPoint:
        return true;
      case KnownEquality::Kind::AtX:
        return std::abs(hit.x - k.x) <= step;
      case KnownEquality::Kind::XAtMost:
        return hit.x <= k.x + step;
      case KnownEquality::Kind::XAtLeast:
        return hit.x >= k.x - step;
    }
    return false;
  };

  for (const auto& hit : report.equality_hits) {
    bool matched = false;
    for (const auto& k : spec.known_equalities) {
      if (matches(k, hit)) {
        matched = true;
        break;
      }
    }
    if (!matched) audit.unmatched_hits.push_back(hit);
  }

  const auto& ns = report.grid.n_values;
  const auto& as = report.grid.a_values;
  for (const auto& k : spec.known_equalities) {
    if (k.n && std::find(ns.begin(), ns.end(), *k.n) == ns.end()) continue;
    if (k.a && spec.has_parameter_a && std::find(as.begin(), as.end(), *k.a) == as.end()) continue;
    bool seen = false;
    for (const auto& hit : report.equality_hits) {
      if (matches(k, hit)) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      std::string what = "known equality not hit: n=";
      what += k.n ? std::to_string(*k.n) : std::string("any");
      what += ", a=";
      what += k.a ? std::to_string(*k.a) : std::string("any");
      audit.missing_expected.push_back(std::move(what));
    }
  }
  return audit;
}

}  // namespace turan
