#pragma once

#include <vector>

namespace turan {

/// Parameters selecting one member of the generalized sine-sum family:
/// n sine terms, real shift parameter a applied to the binomial weights.
struct TuranParams {
  int n = 1;
  double a = 1.0;
};

/// Coefficient vector for a sine polynomial sum_{j=1}^{n} c_j sin(j x).
/// Entry j lives at index j-1.
using CoeffVector = std::vector<double>;

/// Weight of the j-th sine term, C(n+a-j, n-j) = prod_{i=1}^{n-j} (a+i)/i.
/// The empty product (j == n) is exactly 1. Steps multiply before dividing,
/// so integer a in the exactly-representable range stays exact.
/// Throws std::domain_error for j outside 1..n or invalid params.
double turan_coeff(const TuranParams& p, int j);

/// All n coefficients in one pass via the downward recurrence
/// c_{j-1} = c_j * (a+n-j+1) / (n-j+1), seeded with c_n = 1.
CoeffVector turan_coeff_vector(const TuranParams& p);

/// Im sigma_{n,k}(e^{ix}) where sigma_{n,0}(z) = sum_{j=0}^{n} z^j and
/// sigma_{n,k}(z) = sum_{j=0}^{n} sigma_{j,k-1}(z). Literal prefix-sum
/// recursion, O(n*k); kept as an independent cross-check for integer a = k.
/// Throws std::length_error when n*k exceeds the 1e7 work guard.
double sigma_imag_oracle(int n, int k, double x);

}  // namespace turan
