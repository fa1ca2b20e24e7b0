#include "fraclog/fractional.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "fraclog/error.hpp"
#include "fraclog/mlcore.hpp"

namespace fraclog {

namespace {

void check_order(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::domain, "order alpha must lie in (0, 1], got " + std::to_string(alpha));
  }
}

// Samples of the coarse curve u_{2h} taken from a fine curve (every other node).
SolutionCurve restrict_to_coarse(const SolutionCurve& fine) {
  const TimeGrid coarse = fine.grid.coarsened();
  SolutionCurve out{coarse, {}, 0};
  out.values.reserve(coarse.node_count());
  for (int i = 0; i < coarse.node_count(); ++i) out.values.push_back(fine.values[2 * i]);
  return out;
}

}  // namespace

TimeGrid::TimeGrid(double t_end, int n_steps) : t_end_(t_end), n_steps_(n_steps) {
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw Error(ErrorKind::validation, "t_end must be a positive finite time, got " + std::to_string(t_end));
  }
  if (n_steps < 2) throw Error(ErrorKind::validation, "n_steps must be >= 2, got " + std::to_string(n_steps));
}

TimeGrid TimeGrid::coarsened() const {
  const int m = n_steps_ / 2;
  if (m < 2) throw Error(ErrorKind::validation, "grid too small to coarsen");
  return TimeGrid(node(2 * m), m);
}

void SolutionCurve::validate() const {
  const auto expected = static_cast<std::size_t>(grid.node_count() - first_node);
  if (values.size() != expected) {
    throw Error(ErrorKind::validation, "curve has " + std::to_string(values.size()) + " values, grid needs " +
                                           std::to_string(expected));
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorKind::validation, "curve contains a non-finite value");
  }
}

RhsSpec RhsSpec::logistic(double k, bool alpha_power) {
  if (!(k > 0.0)) throw Error(ErrorKind::validation, "logistic rate k must be > 0");
  RhsSpec r;
  r.kind_ = Kind::logistic;
  r.rate_param_ = k;
  r.capacity_ = 1.0;
  r.alpha_power_ = alpha_power;
  return r;
}

RhsSpec RhsSpec::si(double population, double beta_contact, bool alpha_power) {
  if (!(population > 0.0)) throw Error(ErrorKind::validation, "population N must be > 0");
  if (!(beta_contact > 0.0)) throw Error(ErrorKind::validation, "contact rate beta must be > 0");
  RhsSpec r;
  r.kind_ = Kind::si;
  r.rate_param_ = beta_contact;
  r.capacity_ = population;
  r.alpha_power_ = alpha_power;
  return r;
}

RhsSpec RhsSpec::sis(double endemic_level, double beta_contact, bool alpha_power) {
  if (!(endemic_level > 0.0)) {
    throw Error(ErrorKind::degenerate_model, "endemic level A = N - lambda/beta must be > 0");
  }
  if (!(beta_contact > 0.0)) throw Error(ErrorKind::validation, "contact rate beta must be > 0");
  RhsSpec r;
  r.kind_ = Kind::sis;
  r.rate_param_ = beta_contact;
  r.capacity_ = endemic_level;
  r.alpha_power_ = alpha_power;
  return r;
}

RhsSpec RhsSpec::custom(Fn f, Fn dfdu) {
  if (!f) throw Error(ErrorKind::validation, "custom right-hand side is empty");
  RhsSpec r;
  r.kind_ = Kind::custom;
  r.fn_ = std::move(f);
  r.dfdu_ = std::move(dfdu);
  return r;
}

double RhsSpec::rate(double alpha) const {
  switch (kind_) {
    case Kind::logistic:
      return alpha_power_ ? std::pow(rate_param_, alpha) : rate_param_;
    case Kind::si:
    case Kind::sis:
      // beta I (C - I) == (C beta / C) I (C - I); the exponent applies to C beta.
      return alpha_power_ ? std::pow(capacity_ * rate_param_, alpha) / capacity_ : rate_param_;
    case Kind::custom:
      break;
  }
  return 0.0;
}

double RhsSpec::operator()(double t, double u, double alpha) const {
  if (kind_ == Kind::custom) return fn_(t, u);
  return rate(alpha) * u * (capacity_ - u);
}

double RhsSpec::dfdu(double t, double u, double alpha) const {
  if (kind_ != Kind::custom) return rate(alpha) * (capacity_ - 2.0 * u);
  if (dfdu_) return dfdu_(t, u);
  const double du = 1e-6 * std::max(1.0, std::fabs(u));
  return (fn_(t, u + du) - fn_(t, u - du)) / (2.0 * du);
}

SolutionCurve caputo_l1(const SolutionCurve& curve, double alpha) {
  check_order(alpha);
  if (curve.first_node != 0) throw Error(ErrorKind::validation, "caputo_l1 needs a curve starting at t_0");
  curve.validate();
  const int n = curve.grid.n_steps();
  const double h = curve.grid.step();

  // b_j = (j+1)^(1-a) - j^(1-a); b_0 = 1 holds for every a, including a = 1.
  const double p = 1.0 - alpha;
  std::vector<double> b(n);
  b[0] = 1.0;
  for (int j = 1; j < n; ++j) b[j] = std::pow(j + 1.0, p) - std::pow(static_cast<double>(j), p);

  std::vector<double> du(n);
  for (int i = 1; i <= n; ++i) du[i - 1] = curve.values[i] - curve.values[i - 1];

  const double scale = std::pow(h, -alpha) / gamma_fn(2.0 - alpha);
  SolutionCurve out{curve.grid, std::vector<double>(n), 1};
  for (int i = 1; i <= n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < i; ++j) acc += b[j] * du[i - j - 1];
    out.values[i - 1] = scale * acc;
  }
  return out;
}

SolutionCurve fabm_solve(const RhsSpec& rhs, double alpha, double u0, const TimeGrid& grid,
                         const FabmOptions& opts) {
  check_order(alpha);
  if (!std::isfinite(u0)) throw Error(ErrorKind::validation, "initial value must be finite");
  if (opts.corrector_passes < 1 || opts.corrector_passes > 5) {
    throw Error(ErrorKind::validation, "corrector_passes must lie in 1..5");
  }
  const int n = grid.n_steps();
  const double h = grid.step();
  const double ha = std::pow(h, alpha);
  const double pred_scale = ha / gamma_fn(alpha + 1.0);
  const double corr_scale = ha / gamma_fn(alpha + 2.0);

  // k^a and k^(a+1) for k = 0..n+1
  std::vector<double> pa(n + 2), pa1(n + 2);
  for (int k = 0; k <= n + 1; ++k) {
    pa[k] = std::pow(static_cast<double>(k), alpha);
    pa1[k] = std::pow(static_cast<double>(k), alpha + 1.0);
  }

  std::vector<double> u(n + 1), f(n + 1);
  u[0] = u0;
  f[0] = rhs(0.0, u0, alpha);
  for (int m = 0; m < n; ++m) {
    // advance from t_m to t_{m+1}
    const double t_next = grid.node(m + 1);
    double pred = 0.0;
    double hist = (pa1[m] - (m - alpha) * pa[m + 1]) * f[0];
    for (int j = 0; j <= m; ++j) {
      const int lag = m - j;
      pred += (pa[lag + 1] - pa[lag]) * f[j];
      if (j >= 1) hist += (pa1[lag + 2] + pa1[lag] - 2.0 * pa1[lag + 1]) * f[j];
    }
    double next = u0 + pred_scale * pred;
    for (int pass = 0; pass < opts.corrector_passes; ++pass) {
      next = u0 + corr_scale * (rhs(t_next, next, alpha) + hist);
    }
    if (!std::isfinite(next) || std::fabs(next) > opts.divergence_bound) {
      throw Error(ErrorKind::divergence, "solution left the bound " + std::to_string(opts.divergence_bound) +
                                             " at t=" + std::to_string(t_next));
    }
    u[m + 1] = next;
    f[m + 1] = rhs(t_next, next, alpha);
  }
  return SolutionCurve{grid, std::move(u), 0};
}

SolutionCurve fabm_error_estimate(const RhsSpec& rhs, double alpha, double u0, const TimeGrid& grid,
                                  const FabmOptions& opts) {
  const SolutionCurve fine = restrict_to_coarse(fabm_solve(rhs, alpha, u0, grid, opts));
  const SolutionCurve coarse = fabm_solve(rhs, alpha, u0, fine.grid, opts);
  const double denom = std::pow(2.0, std::min(2.0, 1.0 + alpha)) - 1.0;
  SolutionCurve out{fine.grid, std::vector<double>(fine.values.size()), 0};
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = (fine.values[i] - coarse.values[i]) / denom;
  }
  return out;
}

ResidualReport residual_meter(const SolutionCurve& candidate, const RhsSpec& rhs, double alpha,
                              const ResidualOptions& opts) {
  check_order(alpha);
  if (opts.skip_nodes < 1) throw Error(ErrorKind::validation, "skip_nodes must be >= 1");
  const SolutionCurve deriv = caputo_l1(candidate, alpha);

  ResidualReport rep{0.0, SolutionCurve{candidate.grid, std::vector<double>(deriv.values.size()), 1}, 0.0};
  for (std::size_t k = 0; k < deriv.values.size(); ++k) {
    const int i = static_cast<int>(k) + 1;
    const double r = deriv.values[k] - rhs(candidate.grid.node(i), candidate.values[i], alpha);
    rep.residual_curve.values[k] = r;
    if (i >= opts.skip_nodes) rep.max_residual = std::max(rep.max_residual, std::fabs(r));
  }

  const SolutionCurve coarse = restrict_to_coarse(candidate);
  const SolutionCurve coarse_deriv = caputo_l1(coarse, alpha);
  const double denom = std::pow(2.0, 2.0 - alpha) - 1.0;
  for (std::size_t k = 0; k < coarse_deriv.values.size(); ++k) {
    const int fine_node = 2 * (static_cast<int>(k) + 1);
    if (fine_node < opts.skip_nodes) continue;
    const double diff = deriv.values[fine_node - 1] - coarse_deriv.values[k];
    rep.l1_error_estimate = std::max(rep.l1_error_estimate, 2.0 * std::fabs(diff) / denom);
  }
  return rep;
}

}  // namespace fraclog
