#include "turan/kernel.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace turan {

namespace {

void validate_params(const TuranParams& p) {
  if (p.n < 1) throw std::domain_error("TuranParams: n must be >= 1");
  if (!std::isfinite(p.a)) throw std::domain_error("TuranParams: a must be finite");
}

}  // namespace

double turan_coeff(const TuranParams& p, int j) {
  validate_params(p);
  if (j < 1 || j > p.n) throw std::domain_error("turan_coeff: j must lie in 1..n");
  // Extended-precision accumulation keeps the result within one double ulp
  // over the full n <= 200 range; integer a stays exact because every
  // intermediate is an integer below 2^53.
  long double value = 1.0L;
  for (int i = 1; i <= p.n - j; ++i) {
    value = value * (static_cast<long double>(p.a) + i) / i;
  }
  return static_cast<double>(value);
}

CoeffVector turan_coeff_vector(const TuranParams& p) {
  validate_params(p);
  CoeffVector c(static_cast<std::size_t>(p.n));
  c[static_cast<std::size_t>(p.n) - 1] = 1.0;
  long double value = 1.0L;
  for (int j = p.n; j >= 2; --j) {
    const int m = p.n - j + 1;
    value = value * (static_cast<long double>(p.a) + m) / m;
    c[j - 2] = static_cast<double>(value);
  }
  return c;
}

double sigma_imag_oracle(int n, int k, double x) {
  if (n < 0 || k < 0) throw std::domain_error("sigma_imag_oracle: n and k must be >= 0");
  if (!std::isfinite(x)) throw std::domain_error("sigma_imag_oracle: x must be finite");
  if (static_cast<long long>(n) * static_cast<long long>(k) > 10'000'000LL) {
    throw std::length_error("sigma_imag_oracle: n*k exceeds the 1e7 work guard");
  }
  // Row 0 holds sigma_{j,0} = sum_{m<=j} e^{imx}; each later pass replaces
  // the row with its prefix sums, which is exactly the recursion.
  std::vector<std::complex<double>> row(static_cast<std::size_t>(n) + 1);
  std::complex<double> acc{0.0, 0.0};
  for (int j = 0; j <= n; ++j) {
    acc += std::complex<double>(std::cos(j * x), std::sin(j * x));
    row[j] = acc;
  }
  for (int pass = 1; pass <= k; ++pass) {
    std::complex<double> s{0.0, 0.0};
    for (int j = 0; j <= n; ++j) {
      s += row[j];
      row[j] = s;
    }
  }
  return row[n].imag();
}

}  // namespace turan
