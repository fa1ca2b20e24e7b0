#include "fraclog/mllog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fraclog/error.hpp"
#include "ml_series.hpp"

namespace fraclog {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_order(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::domain, "order alpha must lie in (0, 1], got " + std::to_string(alpha));
  }
}

struct Sample {
  double value = 0.0;
  bool exact = true;  // false: value is only a lower bound on E_alpha(x)
};

// E_alpha(x) for the root finder. Far on the positive side the series may not
// converge; its partial sum is then still a valid lower bound because every
// term is positive.
Sample sample(double alpha, double x, double y, const SeriesControl& ctrl) {
  try {
    return {ml_eval(alpha, x, ctrl).value, true};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::no_convergence || x <= 0.0) throw;
    const detail::SeriesSum s = detail::taylor_sum(alpha, 1.0, x, 0, ctrl);
    if (s.sum > y) return {s.sum, false};
    throw;
  }
}

}  // namespace

LogBaseContext make_log_context(double alpha, const SeriesControl& ctrl) {
  check_order(alpha);
  LogBaseContext ctx;
  ctx.alpha = alpha;
  ctx.base_value = ml_eval(alpha, 1.0, ctrl).value;
  ctx.ln_base = std::log(ctx.base_value);
  return ctx;
}

double ml_log(const LogBaseContext& ctx, double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::domain, "logarithm argument must be > 0, got " + std::to_string(x));
  return std::log(x) / ctx.ln_base;
}

InverseResult ml_inverse(double alpha, double y, const SeriesControl& ctrl, const InverseControl& inv) {
  check_order(alpha);
  ctrl.validate();
  if (!(y > 0.0) || !std::isfinite(y)) {
    throw Error(ErrorKind::domain, "inverse argument y must be a positive finite number, got " + std::to_string(y));
  }
  const double gate = inv.residual_tol * std::max(1.0, y);

  double lo = -1.0;
  double hi = 1.0;
  Sample s_lo = sample(alpha, lo, y, ctrl);
  while (s_lo.value >= y) {
    if (s_lo.value == y) return {lo, 0, 0.0};
    hi = lo;
    lo *= 2.0;
    if (lo < ctrl.z_min) {
      throw Error(ErrorKind::bracket_failure,
                  "y=" + std::to_string(y) + " lies below E_alpha over the admissible domain");
    }
    s_lo = sample(alpha, lo, y, ctrl);
  }
  Sample s_hi = sample(alpha, hi, y, ctrl);
  while (s_hi.value <= y) {
    if (s_hi.value == y) return {hi, 0, 0.0};
    if (hi >= ctrl.z_max) {
      throw Error(ErrorKind::bracket_failure,
                  "y=" + std::to_string(y) + " lies above E_alpha over the admissible domain");
    }
    lo = hi;
    hi = std::min(2.0 * hi, ctrl.z_max);
    s_hi = sample(alpha, hi, y, ctrl);
  }

  double x = 0.5 * (lo + hi);
  double best_x = x;
  double best_residual = std::numeric_limits<double>::infinity();
  double last_step = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= inv.max_iterations; ++it) {
    const Sample s = sample(alpha, x, y, ctrl);
    const double r = s.value - y;
    if (r < 0.0) {
      lo = x;
    } else if (r > 0.0) {
      hi = x;
    }
    const double residual = std::fabs(r);
    if (s.exact && residual < best_residual) {
      best_residual = residual;
      best_x = x;
    }
    const double resolution = 4.0 * kEps * std::max(1.0, std::fabs(x));
    if (s.exact && residual <= gate && (r == 0.0 || last_step <= resolution || hi - lo <= resolution)) {
      return {x, it, residual};
    }

    double next = 0.5 * (lo + hi);
    if (s.exact) {
      try {
        const double d = ml_deriv(MLParams{alpha, 1.0}, x, ctrl).value;
        if (d > 0.0 && std::isfinite(d)) {
          const double newton = x - r / d;
          if (newton > lo && newton < hi) next = newton;
        }
      } catch (const Error&) {
        // fall back to bisection
      }
    }
    last_step = std::fabs(next - x);
    if (next == x) {
      if (best_residual <= gate) return {best_x, it, best_residual};
      break;
    }
    x = next;
  }
  if (best_residual <= gate) return {best_x, inv.max_iterations, best_residual};
  throw Error(ErrorKind::no_convergence, "inverse of E_alpha did not converge for y=" + std::to_string(y));
}

PropositionReport verify_proposition(const LogBaseContext& ctx, double x1, double x2) {
  PropositionReport r;
  r.alpha = ctx.alpha;
  r.x1 = x1;
  r.x2 = x2;
  r.log_product = ml_log(ctx, x1 * x2);
  r.log_quotient = ml_log(ctx, x1 / x2);
  r.log_x1 = ml_log(ctx, x1);
  r.log_x2 = ml_log(ctx, x2);
  r.log_sum = r.log_x1 + r.log_x2;
  r.log_difference = r.log_x1 - r.log_x2;
  r.product_gap = std::fabs(r.log_product - r.log_sum);
  r.quotient_gap = std::fabs(r.log_quotient - r.log_difference);
  return r;
}

PropositionReport verify_proposition(double alpha, double x1, double x2, const SeriesControl& ctrl) {
  if (!(x1 > 0.0) || !(x2 > 0.0)) {
    throw Error(ErrorKind::domain, "proposition check requires x1 > 0 and x2 > 0");
  }
  return verify_proposition(make_log_context(alpha, ctrl), x1, x2);
}

}  // namespace fraclog
