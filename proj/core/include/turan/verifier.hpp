#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turan/kernel.hpp"

namespace turan {

enum class ParityConstraint { AnyN, OddN, EvenN };

enum class BoundDirection {
  LhsAtLeast,  // margin = lhs - bound
  LhsAtMost,   // margin = bound - lhs
};

/// One entry of the expected-equality set of an inequality.
/// n/a absent means "any"; the point kind narrows where equality happens.
struct KnownEquality {
  std::optional<int> n;
  std::optional<double> a;
  enum class Kind { AnyPoint, AtX, XAtMost, XAtLeast } kind = Kind::AnyPoint;
  double x = 0.0;
};

struct ScanGrid {
  std::vector<int> n_values;
  std::vector<double> a_values;  // empty for specs without the parameter
  int x_steps = 1023;            // interior points; spacing (hi-lo)/(x_steps+1)
  std::optional<int> y_steps;    // set for two-dimensional scans
};

/// Point record carried by violations and the argmin. a is NaN when the
/// spec has no parameter, y is NaN for one-dimensional specs.
struct GridPointRecord {
  int n = 0;
  double a = 0.0;
  double x = 0.0;
  double y = 0.0;
  double lhs = 0.0;
  double bound = 0.0;
  double margin = 0.0;
};

struct EqualityHit {
  int n = 0;
  double a = 0.0;
  double x = 0.0;
  double y = 0.0;
  double margin = 0.0;
};

struct ScanReport {
  std::string spec_id;
  ScanGrid grid;
  double domain_lo = 0.0;
  double domain_hi = 0.0;
  bool two_dimensional = false;
  bool has_parameter_a = true;
  double min_margin = 0.0;
  GridPointRecord argmin;
  std::vector<GridPointRecord> violations;   // margin < -1e-9
  std::vector<EqualityHit> equality_hits;    // |margin| <= 1e-9
  double wall_time_s = 0.0;
};

/// Per-(n, a) evaluators with coefficient vectors prebuilt once per slice.
struct SliceEvaluator {
  struct Clause {
    BoundDirection direction = BoundDirection::LhsAtLeast;
    bool strict = true;
    std::function<double(double x, double y)> bound;
  };
  std::function<double(double x, double y)> lhs;
  std::vector<Clause> clauses;  // margin at a point = min over clauses
};

struct InequalitySpec {
  std::string id;
  std::string description;
  ParityConstraint parity = ParityConstraint::AnyN;
  bool two_dimensional = false;
  bool has_parameter_a = true;
  bool strict = true;  // true when every clause is strict as stated
  double domain_lo = 0.0;
  double domain_hi = 0.0;
  std::vector<KnownEquality> known_equalities;
  ScanGrid default_grid;
  std::function<SliceEvaluator(int n, double a)> prepare;
};

inline constexpr double kViolationTol = 1e-9;  // margin < -tol flags a violation
inline constexpr double kEqualityTol = 1e-9;   // |margin| <= tol flags a hit

/// All registered inequalities, fixed order. Ids:
///   eq1.1 eq1.2 eq1.3 eq3.5 thm3.1 thm3.2 thm3.5 thm3.6 thm3.7 thm3.8
///   thm3.9-odd thm3.9-even thm3.10 thm4.1 thm4.2 thm4.3 thm4.3-reversed
///   thm4.5 eq4.3-lower eq4.3-upper eq4.4
const std::vector<InequalitySpec>& registry();

/// Lookup by id; nullptr when absent.
const InequalitySpec* find_spec(std::string_view id);

/// Worker cap for scans: TURAN_THREADS when set (>= 1), else hardware
/// concurrency. Results are merged in deterministic (n, a) order, so the
/// report content is independent of the actual worker count.
int scan_thread_limit();

/// Exhaustive margin scan of one spec over the grid. n values are filtered
/// to the spec's parity first; an empty filtered set is a domain error.
/// Grid points are x_i = lo + i*(hi-lo)/(steps+1), i = 1..steps (interior
/// only); two-dimensional scans cover y <= x since every registered surface
/// is symmetric. Report content is byte-reproducible across worker counts.
ScanReport scan_inequality(const InequalitySpec& spec, const ScanGrid& grid);

struct SharpnessCounterexampleS {
  int n = 0;
  double x = 0.0;
  double value = 0.0;  // <= -1e-12, strictly negative sum value
};

/// Searches n in 2..8 and x approaching pi for a point where the degree-n
/// sum at parameter a < 1 goes negative. Deterministic scan order, first
/// find wins. Throws std::domain_error for a >= 1.
std::optional<SharpnessCounterexampleS> sharpness_probe_S(double a);

struct SharpnessCounterexampleTheta {
  int n = 2;
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
};

/// Two-variable analogue: n = 2, x small, y approaching pi.
std::optional<SharpnessCounterexampleTheta> sharpness_probe_Theta(double a);

/// Unique crossing x1 in (1.5, 2.8) of x(pi-x)/pi against
/// sin(x) min{1, 2(1+cos x)}: below x1 the parabolic bound is smaller,
/// above x1 it is larger, so neither pointwise bound dominates.
/// Bisection to an interval of width 1e-10; throws std::runtime_error if
/// the bracket does not straddle a sign change.
double crossing_point_remark33();

/// Equality-hit audit used by tests and the CLI: every hit must lie within
/// one grid step of a known equality entry, and every pointwise (AtX) known
/// whose (n, a) was scanned must be hit at least once.
struct EqualityAudit {
  std::vector<EqualityHit> unmatched_hits;
  std::vector<std::string> missing_expected;
  bool ok() const { return unmatched_hits.empty() && missing_expected.empty(); }
};

EqualityAudit audit_equality_hits(const InequalitySpec& spec, const ScanGrid& grid,
                                  const ScanReport& report);

}  // namespace turan
