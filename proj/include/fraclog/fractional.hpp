#pragma once

#include <functional>
#include <vector>

namespace fraclog {

/// Uniform grid t_i = i * t_end / n_steps, i = 0..n_steps.
class TimeGrid {
 public:
  /// Throws Error(validation) unless t_end > 0 and n_steps >= 2.
  TimeGrid(double t_end, int n_steps);

  double t_end() const noexcept { return t_end_; }
  int n_steps() const noexcept { return n_steps_; }
  int node_count() const noexcept { return n_steps_ + 1; }
  double step() const noexcept { return t_end_ / n_steps_; }
  double node(int i) const noexcept { return i == n_steps_ ? t_end_ : t_end_ * i / n_steps_; }

  /// Every other node of this grid (step 2h); requires an even step count.
  TimeGrid coarsened() const;

 private:
  double t_end_;
  int n_steps_;
};

/// Samples on a grid. values[k] belongs to node first_node + k; first_node is
/// 0 for solution curves and 1 for derivative curves (no value at t_0).
struct SolutionCurve {
  TimeGrid grid;
  std::vector<double> values;
  int first_node = 0;

  double time(std::size_t k) const noexcept { return grid.node(first_node + static_cast<int>(k)); }

  /// Throws Error(validation) on a length mismatch or a non-finite value.
  void validate() const;
};

/// Right-hand side f(t, u) of D^alpha u = f(t, u).
class RhsSpec {
 public:
  enum class Kind { logistic, si, sis, custom };
  using Fn = std::function<double(double t, double u)>;

  /// k^alpha u (1 - u), or k u (1 - u) with alpha_power = false.
  static RhsSpec logistic(double k, bool alpha_power = true);
  /// beta I (N - I); with alpha_power the rate N beta becomes (N beta)^alpha.
  static RhsSpec si(double population, double beta_contact, bool alpha_power = false);
  /// beta I (A - I), A = N - lambda / beta; alpha_power as for si.
  static RhsSpec sis(double endemic_level, double beta_contact, bool alpha_power = false);
  /// Arbitrary f; dfdu is estimated by central differences when omitted.
  static RhsSpec custom(Fn f, Fn dfdu = {});

  Kind kind() const noexcept { return kind_; }
  double operator()(double t, double u, double alpha) const;
  double dfdu(double t, double u, double alpha) const;

 private:
  RhsSpec() = default;
  // u (capacity - u) scaled by the model rate.
  double rate(double alpha) const;

  Kind kind_ = Kind::custom;
  double rate_param_ = 0.0;  // k, or beta_contact
  double capacity_ = 1.0;    // 1, N, or A
  bool alpha_power_ = false;
  Fn fn_;
  Fn dfdu_;
};

/// Caputo derivative of a sampled curve by the L1 scheme:
///   D^a u(t_i) ~ h^-a / Gamma(2-a) sum_{j=0}^{i-1} b_j (u_{i-j} - u_{i-j-1}),
///   b_j = (j+1)^(1-a) - j^(1-a),
/// at t_1..t_n (first_node = 1). At a = 1 this is the backward difference.
SolutionCurve caputo_l1(const SolutionCurve& curve, double alpha);

struct FabmOptions {
  int corrector_passes = 1;       ///< 1..5
  double divergence_bound = 1e8;  ///< |u| above this aborts with Error(divergence)
};

/// Fractional Adams-Bashforth-Moulton predictor-corrector for
/// D^alpha u = f(t, u), u(0) = u0: fractional rectangle predictor, product
/// trapezoid corrector with kernel (t - tau)^(alpha-1) / Gamma(alpha).
SolutionCurve fabm_solve(const RhsSpec& rhs, double alpha, double u0, const TimeGrid& grid,
                         const FabmOptions& opts = {});

/// Richardson estimate of the FABM error at the nodes shared with the 2h grid,
/// |u_h - u_2h| / (2^p - 1) with p = min(2, 1 + alpha), on the coarse grid.
SolutionCurve fabm_error_estimate(const RhsSpec& rhs, double alpha, double u0, const TimeGrid& grid,
                                  const FabmOptions& opts = {});

struct ResidualOptions {
  int skip_nodes = 5;  ///< nodes t_0..t_{skip-1} are left out of the maxima
};

struct ResidualReport {
  double max_residual = 0.0;
  SolutionCurve residual_curve;  ///< D^alpha u - f(t, u) at t_1..t_n
  /// Error of the L1 measurement itself, from comparing step h with step 2h:
  /// 2 |D_h - D_2h| / (2^(2-alpha) - 1), maximised over the shared nodes.
  double l1_error_estimate = 0.0;
};

/// Measures how well a sampled candidate satisfies D^alpha u = f(t, u).
ResidualReport residual_meter(const SolutionCurve& candidate, const RhsSpec& rhs, double alpha,
                              const ResidualOptions& opts = {});

}  // namespace fraclog
