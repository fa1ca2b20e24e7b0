#pragma once

#include "fraclog/mlcore.hpp"

namespace fraclog {

/// Logarithm with base E_alpha(1). This is the quantity tabulated as
/// "log_{E_alpha}(x)"; it is not the functional inverse of E_alpha (see
/// ml_inverse).
struct LogBaseContext {
  double alpha = 1.0;
  double base_value = 0.0;  ///< E_alpha(1) > 1
  double ln_base = 0.0;     ///< ln(E_alpha(1)) > 0
};

/// Throws Error(domain) unless 0 < alpha <= 1.
LogBaseContext make_log_context(double alpha, const SeriesControl& ctrl = {});

/// ln(x) / ln(E_alpha(1)). Throws Error(domain) for x <= 0.
double ml_log(const LogBaseContext& ctx, double x);

struct InverseResult {
  double x = 0.0;         ///< E_alpha(x) ~= y
  int iterations = 0;
  double residual = 0.0;  ///< |E_alpha(x) - y|
};

struct InverseControl {
  double residual_tol = 1e-10;  ///< accept when residual <= residual_tol * max(1, y)
  int max_iterations = 200;
};

/// Functional inverse L_alpha(y): the x with E_alpha(x) = y, for y > 0 and
/// 0 < alpha <= 1 (E_alpha is strictly increasing there).
///
/// The bracket starts at [-1, 1] and is doubled outward until it straddles
/// y; Newton steps (derivative from ml_deriv) are taken inside it, with a
/// bisection step whenever Newton would leave the bracket. Iteration continues
/// past the residual gate until the step reaches rounding level.
///
/// Errors: domain for y <= 0 or alpha outside (0, 1]; bracket_failure when
/// y is outside the range attainable within [ctrl.z_min, ctrl.z_max];
/// no_convergence after max_iterations.
InverseResult ml_inverse(double alpha, double y, const SeriesControl& ctrl = {}, const InverseControl& inv = {});

/// One row of the product/quotient identity check for the base-E_alpha(1)
/// logarithm, with the identity gaps.
struct PropositionReport {
  double alpha = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double log_product = 0.0;     ///< log(x1 x2)
  double log_quotient = 0.0;    ///< log(x1 / x2)
  double log_x1 = 0.0;
  double log_x2 = 0.0;
  double log_sum = 0.0;         ///< log(x1) + log(x2)
  double log_difference = 0.0;  ///< log(x1) - log(x2)
  double product_gap = 0.0;     ///< |log_product - log_sum|
  double quotient_gap = 0.0;    ///< |log_quotient - log_difference|
};

PropositionReport verify_proposition(const LogBaseContext& ctx, double x1, double x2);
PropositionReport verify_proposition(double alpha, double x1, double x2, const SeriesControl& ctrl = {});

}  // namespace fraclog
