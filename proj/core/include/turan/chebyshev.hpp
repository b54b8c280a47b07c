#pragma once

#include <optional>
#include <vector>

#include "turan/kernel.hpp"

namespace turan {

struct ChebQuery {
  int n = 0;
  double x = 0.0;
};

/// Chebyshev T_n(x) by the three-term recurrence T_{k+1} = 2x T_k - T_{k-1}.
double cheb_T(const ChebQuery& q);

/// Chebyshev U_n(x), same recurrence seeded with U_0 = 1, U_1 = 2x.
double cheb_U(const ChebQuery& q);

/// Lambda_{n,a}(x) = sum_{j=0}^{n} C(n+a-j, n-j) U_j(x).
/// Coefficients are the degree-(n+1) family weights shifted by one, so
/// Lambda_{n,a}(cos t) sin t equals the degree-(n+1) sine sum at t.
double eval_Lambda(int n, double a, double x);

enum class QuadScheme {
  ClosedForm,            // trig antiderivative, production path
  GaussLegendreOnTheta,  // t = cos(theta) substitution, composite panels
};

struct QuadratureConfig {
  int node_count = 64;  // Gauss-Legendre nodes per panel, >= 4
  QuadScheme scheme = QuadScheme::ClosedForm;
};

/// integral_x^1 U_{2n}(t) / sqrt(1-t^2) dt.
/// Closed form: sum_{j=1}^{n} sin(2j z)/j + z with z = arccos x.
/// Quadrature: integral_0^z U_{2n}(cos theta) dtheta; the substitution
/// removes the endpoint singularity and panels are sized so the node
/// density stays ahead of the integrand frequency 2n+1.
/// Throws std::domain_error for |x| >= 1 or node_count < 4.
double integral_U_weighted(int n, double x, const QuadratureConfig& cfg = {});

/// integral_x^1 T_{n+1}(t) U_n(t) / sqrt(1-t^2) dt.
/// Closed form: sum_{j=0}^{n} sin((2j+1) z)/(2j+1) with z = arccos x.
double integral_TU_weighted(int n, double x, const QuadratureConfig& cfg = {});

enum class GapSide {
  LowerGap,  // integral_x^1 U_n(t)/sqrt(1-t^2) dt - arccos x
  UpperGap,  // pi - arccos x - integral_x^1 U_n(t)/sqrt(1-t^2) dt
};

struct SignChangePair {
  double x_negative = 0.0;
  double value_negative = 0.0;
  double x_positive = 0.0;
  double value_positive = 0.0;
};

/// For odd n, scans 2048 points of (0,1) for a sign change of the chosen
/// gap function; for odd n the weighted integral reduces to twice a
/// truncated odd-harmonic sum, so both comparisons in the even-degree bound
/// can fail, each on its own side. Returns the first negative and first
/// positive sample, or nullopt when the scan finds no sign change.
/// Throws std::domain_error for even or nonpositive n.
std::optional<SignChangePair> odd_degree_sign_change(int n, GapSide side);

/// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on the
/// Legendre recurrence. Exposed for direct testing.
void gauss_legendre(int m, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace turan
