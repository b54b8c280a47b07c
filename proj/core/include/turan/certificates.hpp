#pragma once

#include <string>
#include <vector>

#include "turan/kernel.hpp"

namespace turan {

enum class CertVerdict {
  CertifiedNonnegative,  // every gamma_k >= 0; the sum is >= 0 on (0, pi)
  Indeterminate,         // some gamma_k < 0; says nothing about the sign
};

struct GammaCertificate {
  std::vector<double> gammas;  // gamma_k at index k-1
  CertVerdict verdict = CertVerdict::Indeterminate;
  double min_gamma = 0.0;
  int argmin_index = 0;  // 1-based, first index attaining min_gamma
};

/// gamma_k = c_k + 2 sum_{j=1}^{n-k} (-1)^j c_{j+k}, computed in O(n) with a
/// running alternating tail (T_{k-1} = -c_k - T_k). The certificate threshold
/// is exact: verdict is CertifiedNonnegative iff min_gamma >= 0.
GammaCertificate gamma_transform(const CoeffVector& c);

/// sum_{j=1}^{n} gamma_j phi_j(x), evaluated with a running sine prefix so
/// the whole reconstruction is O(n). Inverts gamma_transform pointwise:
/// reconstruct(gamma_transform(c), x) == sine_sum(c, x) up to rounding.
double reconstruct_from_gamma(const std::vector<double>& gammas, double x);

/// Nonnegativity certificate for sum c_j sin(j x) on (0, pi): all gammas
/// nonnegative is sufficient since each phi_j >= 0 there. Indeterminate is
/// not a disproof.
GammaCertificate steinig_certify(const CoeffVector& c);

struct Lemma24Result {
  bool ok = false;
  std::string first_violation;  // empty when ok
};

/// Coefficient conditions: 2 a_k <= a_{k-1} + a_{k+1} for 2 <= k <= n-1,
/// and 0 <= 2 a_n <= a_{n-1}. Exact comparisons, no tolerance.
/// Throws std::domain_error for n < 3.
Lemma24Result lemma24_check(const CoeffVector& av);

/// Difference coefficients fed to the certificate machinery:
/// c~_j = a_j - a_{j+2} for j <= n-2, c~_{n-1} = a_{n-1}, c~_n = a_n.
/// sum c~_j sin(j x) telescopes to the gap between the degree-n and
/// degree-(n-2) sums.
CoeffVector lemma24_difference_coeffs(const CoeffVector& av);

/// Second difference a~_{j-1} - 2 a~_j + a~_{j+1} of the family weights in
/// the ratio form a(a-1)/(m(m+1)) * prod_{i=1}^{m-1} (a+i)/i with m = n-j.
/// Requires n >= 3 and 2 <= j <= n-1; vanishes identically for a in {0, 1}.
double turan_second_difference(const TuranParams& p, int j);

struct EqualityDiagnostics {
  double x0 = 0.0;
  std::vector<int> vanishing_phi_indices;  // i with |phi_i(x0)| <= 1e-9
  double second_diff_at_2 = 0.0;           // gamma_2 of the input vector
};

/// Diagnostics at a near-equality point: which phi_i vanish at x0 and the
/// gamma_2 combination that equality forces to zero (phi_2 > 0 on all of
/// (0, pi), so a zero sum with nonnegative gammas needs gamma_2 = 0).
/// Preconditions (else std::domain_error): x0 in (0, pi) and the
/// reconstructed sum at x0 within 1e-9 of zero.
EqualityDiagnostics equality_diagnostics(const CoeffVector& c, double x0);

}  // namespace turan
