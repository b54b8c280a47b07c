#include "turan/certificates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "compensated.hpp"
#include "turan/sine_sums.hpp"

namespace turan {

namespace {

constexpr double kVanishTol = 1e-9;

void require_nonempty(const CoeffVector& c, const char* who) {
  if (c.empty()) throw std::domain_error(std::string(who) + ": coefficient vector must be nonempty");
}

}  // namespace

GammaCertificate gamma_transform(const CoeffVector& c) {
  require_nonempty(c, "gamma_transform");
  const int n = static_cast<int>(c.size());
  GammaCertificate cert;
  cert.gammas.resize(c.size());
  // Alternating tail T_k = sum_{j=1}^{n-k} (-1)^j c_{j+k}, maintained
  // backwards via T_{k-1} = -c_k - T_k. One pass, no quadratic rescan.
  double tail = 0.0;
  for (int k = n; k >= 1; --k) {
    cert.gammas[k - 1] = c[k - 1] + 2.0 * tail;
    tail = -c[k - 1] - tail;
  }
  cert.min_gamma = cert.gammas[0];
  cert.argmin_index = 1;
  for (int k = 2; k <= n; ++k) {
    if (cert.gammas[k - 1] < cert.min_gamma) {
      cert.min_gamma = cert.gammas[k - 1];
      cert.argmin_index = k;
    }
  }
  cert.verdict = cert.min_gamma >= 0.0 ? CertVerdict::CertifiedNonnegative
                                       : CertVerdict::Indeterminate;
  return cert;
}

double reconstruct_from_gamma(const std::vector<double>& gammas, double x) {
  if (gammas.empty()) throw std::domain_error("reconstruct_from_gamma: empty gamma vector");
  // phi_j(x) = 2 * prefix_{j-1}(x) + sin(j x) with prefix_m = sum_{i<=m} sin(i x),
  // so one running prefix turns the double sum into a single pass.
  detail::CompensatedSum total;
  detail::CompensatedSum prefix;
  for (std::size_t j = 1; j <= gammas.size(); ++j) {
    const double sj = std::sin(static_cast<double>(j) * x);
    total.add(gammas[j - 1] * (2.0 * prefix.value() + sj));
    prefix.add(sj);
  }
  return total.value();
}

GammaCertificate steinig_certify(const CoeffVector& c) {
  return gamma_transform(c);
}

Lemma24Result lemma24_check(const CoeffVector& av) {
  if (av.size() < 3) throw std::domain_error("lemma24_check: needs at least 3 coefficients");
  const int n = static_cast<int>(av.size());
  for (int k = 2; k <= n - 1; ++k) {
    if (2.0 * av[k - 1] > av[k - 2] + av[k]) {
      return {false, "2*a[" + std::to_string(k) + "] > a[" + std::to_string(k - 1) + "] + a[" +
                         std::to_string(k + 1) + "]"};
    }
  }
  if (av[n - 1] < 0.0) {
    return {false, "a[" + std::to_string(n) + "] < 0"};
  }
  if (2.0 * av[n - 1] > av[n - 2]) {
    return {false, "2*a[" + std::to_string(n) + "] > a[" + std::to_string(n - 1) + "]"};
  }
  return {true, {}};
}

CoeffVector lemma24_difference_coeffs(const CoeffVector& av) {
  if (av.size() < 3) throw std::domain_error("lemma24_difference_coeffs: needs at least 3 coefficients");
  const std::size_t n = av.size();
  CoeffVector diff(n);
  for (std::size_t j = 0; j + 2 < n; ++j) diff[j] = av[j] - av[j + 2];
  diff[n - 2] = av[n - 2];
  diff[n - 1] = av[n - 1];
  return diff;
}

double turan_second_difference(const TuranParams& p, int j) {
  if (p.n < 3) throw std::domain_error("turan_second_difference: needs n >= 3");
  if (!std::isfinite(p.a)) throw std::domain_error("turan_second_difference: a must be finite");
  if (j < 2 || j > p.n - 1) throw std::domain_error("turan_second_difference: j must lie in 2..n-1");
  const int m = p.n - j;
  double value = p.a * (p.a - 1.0) / (static_cast<double>(m) * (m + 1));
  for (int i = 1; i <= m - 1; ++i) {
    value = value * (p.a + i) / i;
  }
  return value;
}

EqualityDiagnostics equality_diagnostics(const CoeffVector& c, double x0) {
  require_nonempty(c, "equality_diagnostics");
  if (!(x0 > 0.0 && x0 < std::numbers::pi)) {
    throw std::domain_error("equality_diagnostics: x0 must lie in (0, pi)");
  }
  const GammaCertificate cert = gamma_transform(c);
  const double value = reconstruct_from_gamma(cert.gammas, x0);
  if (std::abs(value) > kVanishTol) {
    throw std::domain_error("equality_diagnostics: sum does not vanish at x0");
  }
  EqualityDiagnostics d;
  d.x0 = x0;
  for (int i = 1; i <= static_cast<int>(c.size()); ++i) {
    if (std::abs(fejer_phi_closed(i, x0)) <= kVanishTol) d.vanishing_phi_indices.push_back(i);
  }
  d.second_diff_at_2 = c.size() >= 2 ? cert.gammas[1] : 0.0;
  return d;
}

}  // namespace turan
