#pragma once

#include <string_view>

namespace fraclog {

/// Mittag-Leffler parameters for E_{alpha,beta}(z).
struct MLParams {
  double alpha = 1.0;
  double beta = 1.0;

  /// Throws Error(domain) unless alpha > 0 and beta > 0.
  void validate() const;
};

/// Truncation and domain controls shared by every series evaluation.
struct SeriesControl {
  double tol = 1e-14;                ///< relative truncation tolerance, 0 < tol < 1
  int max_terms = 500;               ///< hard cap on series terms, >= 10
  double cancel_ratio_limit = 1e12;  ///< max|term| / |sum| above which a result is degraded
  double z_max = 50.0;               ///< largest accepted positive argument
  double z_min = -1e8;               ///< most negative accepted argument
  double z_switch = 10.0;            ///< |z| beyond which the asymptotic branch is tried (z < 0)

  void validate() const;
};

enum class Precision { ok, degraded };

/// Which evaluation route produced a value.
enum class MLRoute { exponential, taylor, asymptotic, integral, recurrence };

std::string_view to_string(Precision p) noexcept;
std::string_view to_string(MLRoute r) noexcept;

struct MLValue {
  double value = 0.0;
  double est_error = 0.0;
  int terms_used = 0;
  Precision precision_flag = Precision::ok;
  MLRoute route = MLRoute::taylor;
};

/// Euler gamma. Throws Error(pole) at non-positive integers and
/// Error(overflow) for x > 171.6.
double gamma_fn(double x);

/// 1/Gamma(x), defined everywhere: zero at the poles, finite for large
/// negative x (may overflow to +-inf far out on the negative axis).
double rgamma(double x) noexcept;

/// E_{alpha,beta}(z) for real z in [ctrl.z_min, ctrl.z_max].
///
/// Routes:
///   - alpha == 1, beta == 1: std::exp.
///   - Taylor series sum z^n / Gamma(alpha n + beta) with Neumaier
///     summation; stops after two consecutive terms below tol * |sum|.
///   - z < 0, 0 < alpha < 1: the algebraic asymptotic expansion
///     -sum_k z^-k / Gamma(beta - alpha k) (smallest-term truncation) when
///     |z| > z_switch and its error estimate is within tol, otherwise an
///     exact integral representation evaluated by tanh-sinh quadrature.
///   - z > 0 where the series does not converge within max_terms: the
///     exponential asymptotic (1/alpha) z^((1-beta)/alpha) exp(z^(1/alpha)).
///     The value may be +inf when E exceeds the double range.
///
/// precision_flag is degraded only when the Taylor series had to be used
/// with max|term| / |sum| > cancel_ratio_limit (alpha = 1 with beta != 1 or
/// alpha > 1 and large negative z).
MLValue ml_eval(const MLParams& params, double z, const SeriesControl& ctrl = {});

/// E_alpha(z) = E_{alpha,1}(z).
inline MLValue ml_eval(double alpha, double z, const SeriesControl& ctrl = {}) {
  return ml_eval(MLParams{alpha, 1.0}, z, ctrl);
}

/// d/dz E_{alpha,beta}(z) = sum_{n>=1} n z^(n-1) / Gamma(alpha n + beta).
/// For beta == 1 this is E_{alpha,alpha}(z) / alpha.
MLValue ml_deriv(const MLParams& params, double z, const SeriesControl& ctrl = {});

}  // namespace fraclog
