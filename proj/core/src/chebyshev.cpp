#include "turan/chebyshev.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "compensated.hpp"
#include "turan/sine_sums.hpp"

namespace turan {

namespace {

void require_open_unit(double x, const char* who) {
  if (!(x > -1.0 && x < 1.0)) {
    throw std::domain_error(std::string(who) + ": x must lie in (-1, 1)");
  }
}

void require_nodes(const QuadratureConfig& cfg) {
  if (cfg.node_count < 4) throw std::domain_error("QuadratureConfig: node_count must be >= 4");
}

const std::pair<std::vector<double>, std::vector<double>>& cached_rule(int m) {
  static std::mutex mu;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) {
    std::pair<std::vector<double>, std::vector<double>> rule;
    gauss_legendre(m, rule.first, rule.second);
    it = cache.emplace(m, std::move(rule)).first;
  }
  return it->second;
}

// Composite Gauss-Legendre on [lo, hi]. Panels are sized so each one spans
// at most node_count radians of integrand phase, which keeps the fixed rule
// deep in its spectral-convergence regime for oscillatory integrands.
template <typename F>
double gl_integrate(F&& f, double lo, double hi, int node_count, int frequency) {
  const auto& [nodes, weights] = cached_rule(node_count);
  const double length = hi - lo;
  int panels = static_cast<int>(std::ceil(frequency * length / node_count));
  if (panels < 1) panels = 1;
  const double h = length / panels;
  detail::CompensatedSum acc;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * h;
    const double mid = a + 0.5 * h;
    const double half = 0.5 * h;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      acc.add(weights[i] * half * f(mid + half * nodes[i]));
    }
  }
  return acc.value();
}

}  // namespace

double cheb_T(const ChebQuery& q) {
  if (q.n < 0) throw std::domain_error("cheb_T: n must be >= 0");
  if (q.n == 0) return 1.0;
  double prev = 1.0;
  double cur = q.x;
  for (int k = 2; k <= q.n; ++k) {
    const double next = 2.0 * q.x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double cheb_U(const ChebQuery& q) {
  if (q.n < 0) throw std::domain_error("cheb_U: n must be >= 0");
  if (q.n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * q.x;
  for (int k = 2; k <= q.n; ++k) {
    const double next = 2.0 * q.x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double eval_Lambda(int n, double a, double x) {
  if (n < 0) throw std::domain_error("eval_Lambda: n must be >= 0");
  // The weight of U_j equals the (j+1)-th coefficient of the degree-(n+1)
  // sine family, so one shifted vector serves both sides of the bridge.
  // Recurrence and accumulation run in extended precision; the weights can
  // reach 1e7 and the sine-sum comparison is held to an absolute 1e-9.
  const CoeffVector c = turan_coeff_vector({n + 1, a});
  long double prev = 1.0L;  // U_0
  long double acc = c[0] * prev;
  if (n == 0) return static_cast<double>(acc);
  long double cur = 2.0L * x;  // U_1
  acc += c[1] * cur;
  for (int j = 2; j <= n; ++j) {
    const long double next = 2.0L * x * cur - prev;
    prev = cur;
    cur = next;
    acc += c[j] * cur;
  }
  return static_cast<double>(acc);
}

double integral_U_weighted(int n, double x, const QuadratureConfig& cfg) {
  if (n < 0) throw std::domain_error("integral_U_weighted: n must be >= 0");
  require_open_unit(x, "integral_U_weighted");
  require_nodes(cfg);
  const double z = std::acos(x);
  if (cfg.scheme == QuadScheme::ClosedForm) {
    detail::CompensatedSum acc;
    for (int j = 1; j <= n; ++j) acc.add(std::sin(2.0 * j * z) / j);
    acc.add(z);
    return acc.value();
  }
  const int degree = 2 * n;
  return gl_integrate([degree](double theta) { return cheb_U({degree, std::cos(theta)}); }, 0.0,
                      z, cfg.node_count, degree + 1);
}

double integral_TU_weighted(int n, double x, const QuadratureConfig& cfg) {
  if (n < 0) throw std::domain_error("integral_TU_weighted: n must be >= 0");
  require_open_unit(x, "integral_TU_weighted");
  require_nodes(cfg);
  const double z = std::acos(x);
  if (cfg.scheme == QuadScheme::ClosedForm) {
    return carslaw_sum(n, z);
  }
  return gl_integrate(
      [n](double theta) {
        const double t = std::cos(theta);
        return cheb_T({n + 1, t}) * cheb_U({n, t});
      },
      0.0, z, cfg.node_count, 2 * n + 2);
}

std::optional<SignChangePair> odd_degree_sign_change(int n, GapSide side) {
  if (n < 1 || n % 2 == 0) {
    throw std::domain_error("odd_degree_sign_change: n must be odd and positive");
  }
  // For odd n, U_n(cos th) sin th = sin((n+1) th) expands over odd cosines,
  // so the weighted integral is 2 * sum_{j=0}^{(n-1)/2} sin((2j+1)z)/(2j+1).
  const int m = (n - 1) / 2;
  constexpr int kScanPoints = 2048;
  bool have_neg = false, have_pos = false;
  SignChangePair found;
  for (int i = 1; i <= kScanPoints; ++i) {
    const double x = static_cast<double>(i) / (kScanPoints + 1);
    const double z = std::acos(x);
    const double integral = 2.0 * carslaw_sum(m, z);
    const double gap =
        side == GapSide::LowerGap ? integral - z : (std::numbers::pi - z) - integral;
    if (!have_neg && gap < 0.0) {
      have_neg = true;
      found.x_negative = x;
      found.value_negative = gap;
    }
    if (!have_pos && gap > 0.0) {
      have_pos = true;
      found.x_positive = x;
      found.value_positive = gap;
    }
    if (have_neg && have_pos) return found;
  }
  return std::nullopt;
}

void gauss_legendre(int m, std::vector<double>& nodes, std::vector<double>& weights) {
  if (m < 1) throw std::domain_error("gauss_legendre: node count must be >= 1");
  nodes.assign(m, 0.0);
  weights.assign(m, 0.0);
  const int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi-style initial guess, then Newton on P_m.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < m; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1);
      }
      // p0 = P_m(z); derivative from the standard identity.
      pp = m * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    nodes[i] = -z;
    nodes[m - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    weights[i] = w;
    weights[m - 1 - i] = w;
  }
}

}  // namespace turan
