// turan: evaluate the sums, certify coefficient vectors, and run the
// inequality verification scans from the command line.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "turan/certificates.hpp"
#include "turan/chebyshev.hpp"
#include "turan/report_io.hpp"
#include "turan/sine_sums.hpp"
#include "turan/verifier.hpp"

namespace {

using turan::io::format_double;

turan::CoeffVector parse_coeffs_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::domain_error(std::string("--coeffs is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw std::domain_error("--coeffs must be a JSON array of numbers");
  turan::CoeffVector c;
  c.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw std::domain_error("--coeffs must contain numbers only");
    c.push_back(v.get<double>());
  }
  return c;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::domain_error("--a-values: cannot parse '" + item + "' as a number");
    }
  }
  if (out.empty()) throw std::domain_error("--a-values: empty list");
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << text;
}

struct EvalArgs {
  std::string sum;
  int n = 0;
  bool has_n = false;
  double a = 1.0;
  double x = 0.0;
  double y = 0.0;
  bool has_y = false;
  std::string coeffs;
};

int run_eval(const EvalArgs& args) {
  auto need_n = [&] {
    if (!args.has_n) throw std::domain_error("--n is required for --sum " + args.sum);
  };
  auto need_y = [&] {
    if (!args.has_y) throw std::domain_error("--y is required for --sum " + args.sum);
  };
  double value = 0.0;
  if (args.sum == "S") {
    need_n();
    value = turan::eval_S({args.n, args.a}, args.x);
  } else if (args.sum == "S-star") {
    need_n();
    value = turan::eval_S_star({args.n, args.a}, args.x);
  } else if (args.sum == "Theta") {
    need_n();
    need_y();
    value = turan::eval_Theta({args.n, args.a}, args.x, args.y);
  } else if (args.sum == "Theta-star") {
    need_n();
    need_y();
    value = turan::eval_Theta_star({args.n, args.a}, args.x, args.y);
  } else if (args.sum == "phi") {
    need_n();
    value = turan::fejer_phi(args.n, args.x);
  } else if (args.sum == "phi-closed") {
    need_n();
    value = turan::fejer_phi_closed(args.n, args.x);
  } else if (args.sum == "fejer-jackson") {
    need_n();
    value = turan::fejer_jackson_sum(args.n, args.x);
  } else if (args.sum == "carslaw") {
    need_n();
    value = turan::carslaw_sum(args.n, args.x);
  } else if (args.sum == "Lambda") {
    need_n();
    value = turan::eval_Lambda(args.n, args.a, args.x);
  } else if (args.sum == "T") {
    need_n();
    value = turan::cheb_T({args.n, args.x});
  } else if (args.sum == "U") {
    need_n();
    value = turan::cheb_U({args.n, args.x});
  } else if (args.sum == "sine-sum") {
    if (args.coeffs.empty()) throw std::domain_error("--coeffs is required for --sum sine-sum");
    value = turan::sine_sum(parse_coeffs_json(args.coeffs), args.x);
  } else {
    throw std::domain_error("unknown --sum kind: " + args.sum);
  }
  std::cout << format_double(value) << '\n';
  return 0;
}

int run_certify(const std::string& coeffs_text) {
  const turan::CoeffVector c = parse_coeffs_json(coeffs_text);
  const turan::GammaCertificate cert = turan::steinig_certify(c);
  std::string out = "{\"schema\":\"v1\",\"verdict\":\"";
  out += cert.verdict == turan::CertVerdict::CertifiedNonnegative ? "CertifiedNonnegative"
                                                                  : "Indeterminate";
  out += "\",\"min_gamma\":";
  out += format_double(cert.min_gamma);
  out += ",\"argmin_index\":";
  out += std::to_string(cert.argmin_index);
  out += ",\"gammas\":[";
  for (std::size_t i = 0; i < cert.gammas.size(); ++i) {
    if (i) out += ',';
    out += format_double(cert.gammas[i]);
  }
  out += "]}\n";
  std::cout << out;
  return 0;
}

struct GridOverrides {
  int n_max = -1;
  int steps = -1;
  std::string a_values;
};

turan::ScanGrid apply_overrides(const turan::InequalitySpec& spec, const GridOverrides& ov) {
  turan::ScanGrid grid = spec.default_grid;
  if (ov.n_max >= 0) {
    const int lo = *std::min_element(spec.default_grid.n_values.begin(),
                                     spec.default_grid.n_values.end());
    grid.n_values.clear();
    for (int n = lo; n <= ov.n_max; ++n) grid.n_values.push_back(n);
  }
  if (ov.steps > 0) {
    grid.x_steps = ov.steps;
    if (spec.two_dimensional) grid.y_steps = ov.steps;
  }
  if (!ov.a_values.empty()) grid.a_values = parse_double_list(ov.a_values);
  return grid;
}

int run_verify(const std::string& spec_id, const GridOverrides& ov, const std::string& out_path,
               bool timings) {
  std::vector<const turan::InequalitySpec*> specs;
  if (spec_id == "all") {
    for (const auto& s : turan::registry()) specs.push_back(&s);
  } else {
    const auto* s = turan::find_spec(spec_id);
    if (s == nullptr) throw std::domain_error("unknown spec id: " + spec_id);
    specs.push_back(s);
  }
  std::string out;
  bool any_violations = false;
  for (const auto* s : specs) {
    const turan::ScanReport report = turan::scan_inequality(*s, apply_overrides(*s, ov));
    any_violations = any_violations || !report.violations.empty();
    out += turan::io::report_to_json(report, timings);
    out += '\n';
  }
  write_text(out_path, out);
  return any_violations ? 2 : 0;
}

int run_sweep_a(const std::string& spec_id, double a_min, double a_max, int steps) {
  if (!(a_min <= a_max)) throw std::domain_error("--a-min must be <= --a-max");
  if (steps < 1) throw std::domain_error("--steps must be >= 1");
  const bool two_var = spec_id == "thm3.10";
  if (!two_var && spec_id != "thm3.4") {
    throw std::domain_error("sweep-a supports spec ids thm3.4 and thm3.10");
  }
  std::string out = "{\"schema\":\"v1\",\"sweep\":\"";
  out += spec_id;
  out += "\",\"a_min\":";
  out += format_double(a_min);
  out += ",\"a_max\":";
  out += format_double(a_max);
  out += ",\"steps\":";
  out += std::to_string(steps);
  out += ",\"results\":[";
  std::optional<double> largest;
  for (int i = 0; i <= steps; ++i) {
    const double a = a_min + i * (a_max - a_min) / steps;
    if (i) out += ',';
    out += "{\"a\":";
    out += format_double(a);
    out += ",\"counterexample\":";
    bool found = false;
    if (a < 1.0) {
      if (two_var) {
        if (const auto hit = turan::sharpness_probe_Theta(a)) {
          found = true;
          out += "{\"n\":" + std::to_string(hit->n) + ",\"x\":" + format_double(hit->x) +
                 ",\"y\":" + format_double(hit->y) + ",\"value\":" + format_double(hit->value) +
                 "}";
        }
      } else {
        if (const auto hit = turan::sharpness_probe_S(a)) {
          found = true;
          out += "{\"n\":" + std::to_string(hit->n) + ",\"x\":" + format_double(hit->x) +
                 ",\"value\":" + format_double(hit->value) + "}";
        }
      }
    }
    if (!found) out += "null";
    out += '}';
    if (found && (!largest || a > *largest)) largest = a;
  }
  out += "],\"largest_a_with_counterexample\":";
  out += largest ? format_double(*largest) : "null";
  out += "}\n";
  std::cout << out;
  return 0;
}

int run_cheb_integral(const std::string& kind, int n, double x, int nodes) {
  const turan::QuadratureConfig closed{nodes, turan::QuadScheme::ClosedForm};
  const turan::QuadratureConfig quad{nodes, turan::QuadScheme::GaussLegendreOnTheta};
  double cf = 0.0;
  double gl = 0.0;
  if (kind == "U") {
    cf = turan::integral_U_weighted(n, x, closed);
    gl = turan::integral_U_weighted(n, x, quad);
  } else if (kind == "TU") {
    cf = turan::integral_TU_weighted(n, x, closed);
    gl = turan::integral_TU_weighted(n, x, quad);
  } else {
    throw std::domain_error("--kind must be U or TU");
  }
  std::cout << "closed_form=" << format_double(cf) << '\n'
            << "quadrature=" << format_double(gl) << '\n';
  return 0;
}

int run_report(const std::string& spec_id, const GridOverrides& ov, const std::string& out_path) {
  const auto* s = turan::find_spec(spec_id);
  if (s == nullptr) throw std::domain_error("unknown spec id: " + spec_id);
  const turan::ScanGrid grid = apply_overrides(*s, ov);
  if (out_path.empty()) {
    turan::io::write_margin_csv(*s, grid, std::cout);
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  turan::io::write_margin_csv(*s, grid, f);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turan-type sine sum evaluation, certification and verification"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a sum at a point");
  eval->add_option("--sum", eval_args.sum, "Which sum to evaluate")
      ->required()
      ->check(CLI::IsMember({"S", "S-star", "Theta", "Theta-star", "phi", "phi-closed",
                             "fejer-jackson", "carslaw", "Lambda", "T", "U", "sine-sum"}));
  auto* eval_n = eval->add_option("--n", eval_args.n, "Degree index");
  eval->add_option("--a", eval_args.a, "Real parameter (default 1)");
  eval->add_option("--x", eval_args.x, "Evaluation point")->required();
  auto* eval_y = eval->add_option("--y", eval_args.y, "Second evaluation point");
  eval->add_option("--coeffs", eval_args.coeffs, "JSON array of coefficients for sine-sum");

  std::string certify_coeffs;
  auto* certify = app.add_subcommand("certify", "Certify a coefficient vector nonnegative");
  certify->add_option("--coeffs", certify_coeffs, "JSON array of coefficients")->required();

  std::string verify_spec;
  GridOverrides verify_ov;
  std::string verify_out;
  bool verify_timings = false;
  auto* verify = app.add_subcommand("verify", "Scan one registered inequality or all of them");
  verify->add_option("--spec", verify_spec, "Spec id or 'all'")->required();
  verify->add_option("--n-max", verify_ov.n_max, "Raise the degree range to this maximum");
  verify->add_option("--steps", verify_ov.steps, "Interior grid points per axis");
  verify->add_option("--a-values", verify_ov.a_values, "Comma-separated parameter values");
  verify->add_option("--out", verify_out, "Write the JSON report(s) here instead of stdout");
  verify->add_flag("--timings", verify_timings, "Emit measured wall time (non-reproducible)");

  std::string sweep_spec;
  double sweep_a_min = 0.0;
  double sweep_a_max = 0.0;
  int sweep_steps = 0;
  auto* sweep = app.add_subcommand("sweep-a", "Probe the sharpness boundary over an a-grid");
  sweep->add_option("--spec", sweep_spec, "thm3.4 (one variable) or thm3.10 (two variables)")
      ->required();
  sweep->add_option("--a-min", sweep_a_min, "Lowest parameter value")->required();
  sweep->add_option("--a-max", sweep_a_max, "Highest parameter value")->required();
  sweep->add_option("--steps", sweep_steps, "Number of grid intervals")->required();

  std::string cheb_kind;
  int cheb_n = 0;
  double cheb_x = 0.0;
  int cheb_nodes = 64;
  auto* cheb = app.add_subcommand("cheb-integral",
                                  "Weighted Chebyshev integral, closed form and quadrature");
  cheb->add_option("--kind", cheb_kind, "U or TU")->required();
  cheb->add_option("--n", cheb_n, "Degree index")->required();
  cheb->add_option("--x", cheb_x, "Lower integration limit in (-1, 1)")->required();
  cheb->add_option("--nodes", cheb_nodes, "Gauss-Legendre nodes per panel");

  auto* crossing = app.add_subcommand("crossing", "Crossing point of the two lower bounds");

  std::string report_spec;
  GridOverrides report_ov;
  std::string report_out;
  auto* report = app.add_subcommand("report", "Dump the margin surface of one spec as CSV");
  report->add_option("--spec", report_spec, "Spec id")->required();
  report->add_option("--n-max", report_ov.n_max, "Raise the degree range to this maximum");
  report->add_option("--steps", report_ov.steps, "Interior grid points per axis");
  report->add_option("--a-values", report_ov.a_values, "Comma-separated parameter values");
  report->add_option("--out", report_out, "Write the CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  eval_args.has_n = eval_n->count() > 0;
  eval_args.has_y = eval_y->count() > 0;

  try {
    if (eval->parsed()) return run_eval(eval_args);
    if (certify->parsed()) return run_certify(certify_coeffs);
    if (verify->parsed())
      return run_verify(verify_spec, verify_ov, verify_out, verify_timings);
    if (sweep->parsed()) return run_sweep_a(sweep_spec, sweep_a_min, sweep_a_max, sweep_steps);
    if (cheb->parsed()) return run_cheb_integral(cheb_kind, cheb_n, cheb_x, cheb_nodes);
    if (crossing->parsed()) {
      std::cout << format_double(turan::crossing_point_remark33()) << '\n';
      return 0;
    }
    if (report->parsed()) return run_report(report_spec, report_ov, report_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
