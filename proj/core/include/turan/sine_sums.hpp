#pragma once

#include "turan/kernel.hpp"

namespace turan {

/// sum_{j=1}^{n} c_j sin(j x).
/// Production path is the backward three-term (Clenshaw) recurrence
/// b_k = c_k + 2 cos(x) b_{k+1} - b_{k+2}, result b_1 sin(x).
/// Near x = 0 (mod pi), where |sin x| < 1e-8, falls back to direct
/// compensated summation to dodge the recurrence's cancellation there.
double sine_sum(const CoeffVector& c, double x);

/// Same sum restricted to odd j (even-index coefficients ignored).
double sine_sum_odd(const CoeffVector& c, double x);

/// sum_{j=1}^{n} c_j sin(j x) sin(j y) / j, incremental angle stepping.
double theta_sum(const CoeffVector& c, double x, double y);

/// Odd-j restriction of theta_sum.
double theta_sum_odd(const CoeffVector& c, double x, double y);

/// phi_n(x) = 2 sum_{j=1}^{n-1} sin(j x) + sin(n x), direct summation.
double fejer_phi(int n, double x);

/// Closed form cos(x/2) (1 - cos(n x)) / sin(x/2), nonnegative on (0, pi).
/// Throws std::domain_error outside the open interval (division guard).
double fejer_phi_closed(int n, double x);

/// S_{n,a}(x) = sum_j C(n+a-j, n-j) sin(j x).
double eval_S(const TuranParams& p, double x);

/// Odd-index part: sum over odd j of C(n+a-j, n-j) sin(j x).
double eval_S_star(const TuranParams& p, double x);

/// Theta_{n,a}(x,y) = sum_j C(n+a-j, n-j) sin(j x) sin(j y) / j.
double eval_Theta(const TuranParams& p, double x, double y);

/// Odd-index part of Theta_{n,a}.
double eval_Theta_star(const TuranParams& p, double x, double y);

/// sum_{j=1}^{n} sin(j x) / j.
double fejer_jackson_sum(int n, double x);

/// sum_{j=0}^{n} sin((2j+1) x) / (2j+1).
double carslaw_sum(int n, double x);

}  // namespace turan
