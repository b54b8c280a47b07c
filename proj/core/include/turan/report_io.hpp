#pragma once

#include <iosfwd>
#include <string>

#include "turan/verifier.hpp"

namespace turan::io {

/// Shortest round-trip decimal text for a double (std::to_chars), at most
/// 17 significant digits. Same doubles give the same bytes on every run.
std::string format_double(double v);

/// ScanReport as single-line JSON, fixed key order:
/// {"schema":"v1","spec":...,"grid":{...},"min_margin":...,"argmin":{...},
///  "violations":[...],"equality_hits":[...],"wall_time_s":...}
/// wall_time_s is emitted as 0 unless include_wall_time is set, keeping
/// default output byte-identical across runs.
std::string report_to_json(const ScanReport& report, bool include_wall_time = false);

/// Streams the full margin surface of one spec as CSV with header
/// n,a,x,y,lhs,bound,margin. The a and y cells are empty when the spec has
/// no parameter / is one-dimensional. Row order equals the scan order.
void write_margin_csv(const InequalitySpec& spec, const ScanGrid& grid, std::ostream& out);

}  // namespace turan::io
