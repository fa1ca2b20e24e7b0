#include "fraclog/mlcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "fraclog/compensated_sum.hpp"
#include "fraclog/error.hpp"
#include "ml_series.hpp"

namespace fraclog {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLogMax = 709.78;  // log(DBL_MAX)

// A negative-argument Taylor sum is only trusted while max|term| / |sum| stays
// below this; beyond it the integral route is more accurate.
constexpr double kTaylorCancellationBudget = 1e2;

// Asymptotic results are accepted when 10x the truncation estimate fits in tol.
constexpr double kAsymptoticSafety = 10.0;

bool is_nonpositive_integer(double x) noexcept { return x <= 0.0 && x == std::nearbyint(x); }

struct SignedLog {
  double log_abs = 0.0;
  int sign = 0;  // 0 means the value is exactly zero
};

// log|1/Gamma(x)| and sign(1/Gamma(x)).
SignedLog signed_log_rgamma(double x) noexcept {
  if (is_nonpositive_integer(x)) return {};
  if (x > 0.0) return {-std::lgamma(x), 1};
  // reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
  const double s = detail::sin_pi(x);
  return {std::lgamma(1.0 - x) + std::log(std::fabs(s)) - std::log(std::numbers::pi), s > 0 ? 1 : -1};
}

// z^n / Gamma(g) without intermediate overflow; n may be negative.
double power_times_rgamma(double z, int n, double g) noexcept {
  if (n == 0) return rgamma(g);
  const double lz = n * std::log(std::fabs(z));
  if (std::fabs(g) < 170.0 && std::fabs(lz) < 700.0) return std::pow(z, n) * rgamma(g);
  const SignedLog r = signed_log_rgamma(g);
  if (r.sign == 0) return 0.0;
  const int zsign = (z < 0.0 && (n % 2) != 0) ? -1 : 1;
  return zsign * r.sign * std::exp(lz + r.log_abs);
}

// -sum_{k>=1} z^-k / Gamma(beta - alpha k), truncated at its smallest term.
struct AlgebraicSum {
  double sum = 0.0;
  double smallest = 0.0;
  int terms = 0;
};

AlgebraicSum algebraic_series(double alpha, double beta, double z, const SeriesControl& ctrl) {
  CompensatedSum acc;
  double prev = std::numeric_limits<double>::infinity();
  int small = 0;
  int used = 0;
  for (int k = 1; k <= ctrl.max_terms; ++k) {
    const double g = beta - alpha * k;
    const double term = -power_times_rgamma(z, -k, g);
    if (term == 0.0) continue;
    if (!std::isfinite(term)) break;
    // 1/Gamma nearly vanishes next to a pole; such a term says nothing about
    // where the divergent tail starts, so it is summed but not used to truncate.
    const double r = std::round(g);
    if (r <= 0.0 && std::fabs(g - r) < 1e-8) {
      acc += term;
      continue;
    }
    if (std::fabs(term) > prev) break;
    acc += term;
    prev = std::fabs(term);
    used = k;
    if (prev <= ctrl.tol * std::fabs(acc.value())) {
      if (++small >= 2) break;
    } else {
      small = 0;
    }
  }
  return {acc.value(), std::isfinite(prev) ? prev : 0.0, used};
}

MLValue exponential_value(double z) {
  const double v = std::exp(z);
  return {v, kEps * v, 0, Precision::ok, MLRoute::exponential};
}

MLValue from_taylor(const detail::SeriesSum& s, const SeriesControl& ctrl) {
  MLValue out;
  out.value = s.sum;
  out.est_error = s.last_abs_term + 4.0 * kEps * s.max_abs_term;
  out.terms_used = s.terms;
  out.route = MLRoute::taylor;
  const double mag = std::fabs(s.sum);
  if (mag == 0.0 || s.max_abs_term / mag > ctrl.cancel_ratio_limit) out.precision_flag = Precision::degraded;
  return out;
}

// Large-positive-z expansion: exponential part plus the algebraic series.
bool try_positive_asymptotic(double alpha, double beta, double z, const SeriesControl& ctrl, MLValue& out) {
  const double lz = std::log(z);
  const double s = std::exp(lz / alpha);
  const double lexp = -std::log(alpha) + (1.0 - beta) / alpha * lz + s;
  const AlgebraicSum alg = algebraic_series(alpha, beta, z, ctrl);
  if (lexp > kLogMax) {
    out = {std::numeric_limits<double>::infinity(), 0.0, alg.terms, Precision::ok, MLRoute::asymptotic};
    return true;
  }
  const double v = std::exp(lexp) + alg.sum;
  const double est = kAsymptoticSafety * alg.smallest + kEps * std::fabs(v);
  if (!(est <= ctrl.tol * std::fabs(v))) return false;
  out = {v, est, alg.terms, Precision::ok, MLRoute::asymptotic};
  return true;
}

// For alpha > 2/3 the expansion on the negative axis also misses
// exponentially small oscillating contributions of size ~exp(cos(pi/alpha) x^(1/alpha)).
double recessive_estimate(double alpha, double beta, double x) noexcept {
  if (alpha <= 2.0 / 3.0) return 0.0;
  const double c = std::cos(std::numbers::pi / alpha);
  const double lx = std::log(x);
  return std::exp(-std::log(alpha) + (1.0 - beta) / alpha * lx + c * std::exp(lx / alpha));
}

bool try_negative_asymptotic(double alpha, double beta, double x, const SeriesControl& ctrl, MLValue& out) {
  const AlgebraicSum alg = algebraic_series(alpha, beta, -x, ctrl);
  const double est =
      kAsymptoticSafety * std::max(alg.smallest, recessive_estimate(alpha, beta, x)) + kEps * std::fabs(alg.sum);
  if (alg.sum == 0.0 || !(est <= ctrl.tol * std::fabs(alg.sum))) return false;
  out = {alg.sum, est, alg.terms, Precision::ok, MLRoute::asymptotic};
  return true;
}

// E_{alpha,beta}(-x) for 0 < alpha < 1, beta < 1 + alpha, x > 0:
//   int_0^inf chi^((1-beta)/alpha) exp(-chi^(1/alpha))
//     (chi sin(pi(1-beta)) + x sin(pi(1-beta+alpha))) / (chi^2 + 2 chi x cos(pi alpha) + x^2) dchi / (alpha pi)
MLValue integral_value(double alpha, double beta, double x, const SeriesControl& ctrl) {
  const double pw = (1.0 - beta) / alpha;
  const double inv_alpha = 1.0 / alpha;
  const double s1 = detail::sin_pi(1.0 - beta);
  const double s2 = x * detail::sin_pi(1.0 - beta + alpha);
  const double c = std::cos(std::numbers::pi * alpha);
  const double scale = 1.0 / (alpha * std::numbers::pi);

  auto kernel = [&](double chi) {
    const double num = chi * s1 + s2;
    const double den = chi * chi + 2.0 * chi * x * c + x * x;
    const double decay = std::exp(-std::pow(chi, inv_alpha));
    const double p = pw == 0.0 ? 1.0 : std::pow(chi, pw);
    return scale * p * decay * num / den;
  };

  // exp(-chi^(1/alpha)) < e^-700 beyond the cut.
  const double cut = std::pow(700.0, alpha);
  std::vector<double> nodes{0.0, cut};
  if (1.0 < cut) nodes.push_back(1.0);
  if (c < 0.0) {
    // near-singular peak of the denominator at chi = -x cos(pi alpha)
    const double peak = -x * c;
    const double width = x * std::sin(std::numbers::pi * alpha);
    for (double b : {peak - width, peak, peak + width}) {
      if (b > 0.0 && b < cut) nodes.push_back(b);
    }
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  thread_local boost::math::quadrature::tanh_sinh<double> integrator;
  const double qtol = std::max(0.1 * ctrl.tol, 4.0 * kEps);
  double total = 0.0;
  double err_total = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    double err = 0.0;
    double l1 = 0.0;
    total += integrator.integrate(kernel, nodes[i], nodes[i + 1], qtol, &err, &l1);
    err_total += err;
  }
  return {total, err_total + 4.0 * kEps * std::fabs(total), 0, Precision::ok, MLRoute::integral};
}

MLValue eval_unchecked(double alpha, double beta, double z, const SeriesControl& ctrl);

// beta >= 1 + alpha is outside the kernel's range; step beta down with
// E_{a,b}(z) = (E_{a,b-a}(z) - 1/Gamma(b-a)) / z.
MLValue negative_fallback(double alpha, double beta, double x, const SeriesControl& ctrl) {
  if (beta < 1.0 + alpha) return integral_value(alpha, beta, x, ctrl);
  const MLValue lower = eval_unchecked(alpha, beta - alpha, -x, ctrl);
  MLValue out = lower;
  out.value = (lower.value - rgamma(beta - alpha)) / -x;
  out.est_error = lower.est_error / x + kEps * std::fabs(out.value);
  out.route = MLRoute::recurrence;
  return out;
}

MLValue eval_unchecked(double alpha, double beta, double z, const SeriesControl& ctrl) {
  if (alpha == 1.0 && beta == 1.0) return exponential_value(z);
  if (z == 0.0) {
    const double v = rgamma(beta);
    return {v, kEps * std::fabs(v), 1, Precision::ok, MLRoute::taylor};
  }

  if (z > 0.0) {
    const detail::SeriesSum s = detail::taylor_sum(alpha, beta, z, 0, ctrl);
    if (s.converged) return from_taylor(s, ctrl);
    MLValue out;
    if (alpha <= 1.0 && try_positive_asymptotic(alpha, beta, z, ctrl, out)) return out;
    throw Error(ErrorKind::no_convergence, "Mittag-Leffler series did not converge within " +
                                               std::to_string(ctrl.max_terms) + " terms at z=" + std::to_string(z));
  }

  const double x = -z;
  if (alpha < 1.0) {
    if (x <= ctrl.z_switch) {
      const detail::SeriesSum s = detail::taylor_sum(alpha, beta, z, 0, ctrl);
      if (s.converged && s.max_abs_term <= kTaylorCancellationBudget * std::fabs(s.sum)) return from_taylor(s, ctrl);
    } else {
      MLValue out;
      if (try_negative_asymptotic(alpha, beta, x, ctrl, out)) return out;
    }
    return negative_fallback(alpha, beta, x, ctrl);
  }

  // alpha = 1 with beta != 1, or alpha > 1: only the series is available.
  const detail::SeriesSum s = detail::taylor_sum(alpha, beta, z, 0, ctrl);
  if (!s.converged) {
    throw Error(ErrorKind::no_convergence, "Mittag-Leffler series did not converge within " +
                                               std::to_string(ctrl.max_terms) + " terms at z=" + std::to_string(z));
  }
  return from_taylor(s, ctrl);
}

void check_domain(double z, const SeriesControl& ctrl) {
  if (!std::isfinite(z) || z > ctrl.z_max || z < ctrl.z_min) {
    throw Error(ErrorKind::domain, "argument z=" + std::to_string(z) + " outside [" + std::to_string(ctrl.z_min) +
                                       ", " + std::to_string(ctrl.z_max) + "]");
  }
}

MLValue combine(const MLValue& a, double value, double est, MLRoute route) {
  MLValue out = a;
  out.value = value;
  out.est_error = est;
  out.route = route;
  return out;
}

MLValue deriv_unchecked(double alpha, double beta, double z, const SeriesControl& ctrl) {
  if (beta == 1.0) {
    // d/dz E_alpha(z) = E_{alpha,alpha}(z) / alpha
    const MLValue e = eval_unchecked(alpha, alpha, z, ctrl);
    return combine(e, e.value / alpha, e.est_error / alpha, e.route);
  }
  if (z == 0.0) {
    const double v = rgamma(alpha + beta);
    return {v, kEps * std::fabs(v), 1, Precision::ok, MLRoute::taylor};
  }
  const detail::SeriesSum s = detail::taylor_sum(alpha, beta, z, 1, ctrl);
  if (s.converged && (z > 0.0 || alpha >= 1.0 || s.max_abs_term <= kTaylorCancellationBudget * std::fabs(s.sum))) {
    return from_taylor(s, ctrl);
  }
  if (alpha >= 1.0 && z < 0.0) {
    throw Error(ErrorKind::no_convergence, "derivative series did not converge at z=" + std::to_string(z));
  }
  if (beta > 1.0) {
    // E' = (E_{a,b-1} - (b-1) E_{a,b}) / (a z)
    const MLValue lo = eval_unchecked(alpha, beta - 1.0, z, ctrl);
    const MLValue hi = eval_unchecked(alpha, beta, z, ctrl);
    const double v = (lo.value - (beta - 1.0) * hi.value) / (alpha * z);
    const double est = (lo.est_error + (beta - 1.0) * hi.est_error) / std::fabs(alpha * z) + kEps * std::fabs(v);
    MLValue out = combine(lo, v, est, MLRoute::recurrence);
    if (hi.precision_flag == Precision::degraded) out.precision_flag = Precision::degraded;
    return out;
  }
  // E_{a,b}(z) = 1/Gamma(b) + z E_{a,b+a}(z)  =>  E' = E_{a,b+a} + z E'_{a,b+a}
  const MLValue up = eval_unchecked(alpha, beta + alpha, z, ctrl);
  const MLValue dup = deriv_unchecked(alpha, beta + alpha, z, ctrl);
  const double v = up.value + z * dup.value;
  const double est = up.est_error + std::fabs(z) * dup.est_error + kEps * std::fabs(v);
  MLValue out = combine(up, v, est, MLRoute::recurrence);
  if (dup.precision_flag == Precision::degraded) out.precision_flag = Precision::degraded;
  return out;
}

}  // namespace

namespace detail {

double sin_pi(double x) noexcept {
  const double n = std::nearbyint(x);
  const double r = x - n;
  if (r == 0.0) return 0.0;
  const double s = std::sin(std::numbers::pi * r);
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

SeriesSum taylor_sum(double alpha, double beta, double z, int order, const SeriesControl& ctrl) {
  SeriesSum out;
  if (z == 0.0) {
    out.sum = order == 0 ? rgamma(beta) : rgamma(alpha + beta);
    out.max_abs_term = std::fabs(out.sum);
    out.terms = 1;
    out.converged = true;
    return out;
  }
  CompensatedSum acc;
  int small = 0;
  const int first = order == 0 ? 0 : 1;
  for (int n = first; n < first + ctrl.max_terms; ++n) {
    const double g = alpha * n + beta;
    const double term = order == 0 ? power_times_rgamma(z, n, g) : n * power_times_rgamma(z, n - 1, g);
    if (!std::isfinite(term)) break;
    acc += term;
    ++out.terms;
    out.max_abs_term = std::max(out.max_abs_term, std::fabs(term));
    out.last_abs_term = std::fabs(term);
    if (out.last_abs_term <= ctrl.tol * std::fabs(acc.value())) {
      if (++small >= 2) {
        out.converged = true;
        break;
      }
    } else {
      small = 0;
    }
  }
  out.sum = acc.value();
  if (!std::isfinite(out.sum)) out.converged = false;
  return out;
}

}  // namespace detail

std::string_view to_string(Precision p) noexcept { return p == Precision::ok ? "ok" : "degraded"; }

std::string_view to_string(MLRoute r) noexcept {
  switch (r) {
    case MLRoute::exponential: return "exponential";
    case MLRoute::taylor: return "taylor";
    case MLRoute::asymptotic: return "asymptotic";
    case MLRoute::integral: return "integral";
    case MLRoute::recurrence: return "recurrence";
  }
  return "unknown";
}

void MLParams::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorKind::domain, "Mittag-Leffler alpha must be > 0, got " + std::to_string(alpha));
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw Error(ErrorKind::domain, "Mittag-Leffler beta must be > 0, got " + std::to_string(beta));
  }
}

void SeriesControl::validate() const {
  if (!(tol > 0.0 && tol < 1.0)) throw Error(ErrorKind::validation, "tol must lie in (0, 1)");
  if (max_terms < 10) throw Error(ErrorKind::validation, "max_terms must be >= 10");
  if (!(cancel_ratio_limit >= 1.0)) throw Error(ErrorKind::validation, "cancel_ratio_limit must be >= 1");
  if (!(z_max > 0.0)) throw Error(ErrorKind::validation, "z_max must be > 0");
  if (!(z_min < 0.0)) throw Error(ErrorKind::validation, "z_min must be < 0");
  if (!(z_switch > 0.0)) throw Error(ErrorKind::validation, "z_switch must be > 0");
}

double gamma_fn(double x) {
  if (std::isnan(x)) throw Error(ErrorKind::domain, "gamma of NaN");
  if (is_nonpositive_integer(x)) throw Error(ErrorKind::pole, "gamma has a pole at x=" + std::to_string(x));
  if (x > 171.6) throw Error(ErrorKind::overflow, "gamma overflows for x=" + std::to_string(x));
  return std::tgamma(x);
}

double rgamma(double x) noexcept {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 180.0) return 0.0;
  if (x > 171.0) return std::exp(-std::lgamma(x));
  if (x >= -170.0) return 1.0 / std::tgamma(x);
  const SignedLog r = signed_log_rgamma(x);
  return r.sign * std::exp(r.log_abs);
}

MLValue ml_eval(const MLParams& params, double z, const SeriesControl& ctrl) {
  params.validate();
  ctrl.validate();
  check_domain(z, ctrl);
  return eval_unchecked(params.alpha, params.beta, z, ctrl);
}

MLValue ml_deriv(const MLParams& params, double z, const SeriesControl& ctrl) {
  params.validate();
  ctrl.validate();
  check_domain(z, ctrl);
  if (params.alpha == 1.0 && params.beta == 1.0) return exponential_value(z);
  return deriv_unchecked(params.alpha, params.beta, z, ctrl);
}

}  // namespace fraclog
