#pragma once

#include <cmath>

namespace turan::detail {

// Compensated accumulator (Neumaier's variant of Kahan summation): keeps a
// running error term so the result is faithful even when a new term is
// larger than the partial sum.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace turan::detail
