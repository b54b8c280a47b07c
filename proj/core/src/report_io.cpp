#include "turan/report_io.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace turan::io {

namespace {

void append_json_point(std::string& out, const GridPointRecord& p, bool with_a, bool with_y) {
  out += "{\"n\":";
  out += std::to_string(p.n);
  if (with_a) {
    out += ",\"a\":";
    out += format_double(p.a);
  }
  out += ",\"x\":";
  out += format_double(p.x);
  if (with_y) {
    out += ",\"y\":";
    out += format_double(p.y);
  }
  out += ",\"lhs\":";
  out += format_double(p.lhs);
  out += ",\"bound\":";
  out += format_double(p.bound);
  out += ",\"margin\":";
  out += format_double(p.margin);
  out += '}';
}

void append_json_hit(std::string& out, const EqualityHit& h, bool with_a, bool with_y) {
  out += "{\"n\":";
  out += std::to_string(h.n);
  if (with_a) {
    out += ",\"a\":";
    out += format_double(h.a);
  }
  out += ",\"x\":";
  out += format_double(h.x);
  if (with_y) {
    out += ",\"y\":";
    out += format_double(h.y);
  }
  out += ",\"margin\":";
  out += format_double(h.margin);
  out += '}';
}

bool parity_keeps(ParityConstraint parity, int n) {
  switch (parity) {
    case ParityConstraint::AnyN: return true;
    case ParityConstraint::OddN: return n % 2 != 0;
    case ParityConstraint::EvenN: return n % 2 == 0;
  }
  return true;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

std::string report_to_json(const ScanReport& report, bool include_wall_time) {
  std::string out;
  out.reserve(1024);
  out += "{\"schema\":\"v1\",\"spec\":\"";
  out += report.spec_id;
  out += "\",\"grid\":{\"n_values\":[";
  for (std::size_t i = 0; i < report.grid.n_values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(report.grid.n_values[i]);
  }
  out += ']';
  if (report.has_parameter_a) {
    out += ",\"a_values\":[";
    for (std::size_t i = 0; i < report.grid.a_values.size(); ++i) {
      if (i) out += ',';
      out += format_double(report.grid.a_values[i]);
    }
    out += ']';
  }
  out += ",\"x_steps\":";
  out += std::to_string(report.grid.x_steps);
  if (report.two_dimensional) {
    out += ",\"y_steps\":";
    out += std::to_string(report.grid.y_steps.value_or(report.grid.x_steps));
  }
  out += ",\"domain\":[";
  out += format_double(report.domain_lo);
  out += ',';
  out += format_double(report.domain_hi);
  out += "]},\"min_margin\":";
  out += format_double(report.min_margin);
  out += ",\"argmin\":";
  append_json_point(out, report.argmin, report.has_parameter_a, report.two_dimensional);
  out += ",\"violations\":[";
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    if (i) out += ',';
    append_json_point(out, report.violations[i], report.has_parameter_a, report.two_dimensional);
  }
  out += "],\"equality_hits\":[";
  for (std::size_t i = 0; i < report.equality_hits.size(); ++i) {
    if (i) out += ',';
    append_json_hit(out, report.equality_hits[i], report.has_parameter_a,
                    report.two_dimensional);
  }
  out += "],\"wall_time_s\":";
  out += include_wall_time ? format_double(report.wall_time_s) : "0";
  out += '}';
  return out;
}

void write_margin_csv(const InequalitySpec& spec, const ScanGrid& grid, std::ostream& out) {
  out << "n,a,x,y,lhs,bound,margin\n";
  const double lo = spec.domain_lo;
  const double step = (spec.domain_hi - lo) / (grid.x_steps + 1);
  const int y_steps = spec.two_dimensional ? grid.y_steps.value_or(grid.x_steps) : 0;
  const double ystep = spec.two_dimensional ? (spec.domain_hi - lo) / (y_steps + 1) : 0.0;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  std::vector<double> as;
  if (spec.has_parameter_a) {
    if (grid.a_values.empty()) throw std::domain_error("write_margin_csv: a grid is empty");
    as = grid.a_values;
  } else {
    as = {nan};
  }

  for (int n : grid.n_values) {
    if (!parity_keeps(spec.parity, n)) continue;
    for (double a : as) {
      const SliceEvaluator se = spec.prepare(n, a);
      auto emit = [&](double x, double y) {
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
        out << n << ',';
        if (spec.has_parameter_a) out << format_double(a);
        out << ',' << format_double(x) << ',';
        if (spec.two_dimensional) out << format_double(y);
        out << ',' << format_double(lhs) << ',' << format_double(binding) << ','
            << format_double(margin) << '\n';
      };
      if (spec.two_dimensional) {
        for (int i = 1; i <= grid.x_steps; ++i) {
          const double x = lo + i * step;
          for (int j = 1; j <= i; ++j) emit(x, lo + j * ystep);
        }
      } else {
        for (int i = 1; i <= grid.x_steps; ++i) emit(lo + i * step, nan);
      }
    }
  }
}

}  // namespace turan::io
