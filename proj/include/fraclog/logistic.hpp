#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fraclog/fractional.hpp"
#include "fraclog/mlcore.hpp"

namespace fraclog {

/// D^alpha u = k^alpha u (1 - u), u(0) = u0.
struct LogisticProblem {
  double alpha = 1.0;  ///< 0 < alpha <= 1
  double k = 1.0;      ///< growth rate, > 0
  double u0 = 0.5;     ///< 0 < u0 < 1; the equilibria 0 and 1 are rejected

  void validate() const;
};

/// Readings of the term (r / Gamma(2-a)) * int t^(1-a) dt^a that forms the
/// Mittag-Leffler argument of the closed forms. Both reduce to r t at a = 1.
enum class ArgInterpretation {
  /// int_0^t f(s) (ds)^a = a int_0^t (t-s)^(a-1) f(s) ds, giving r Gamma(1+a) t.
  jumarie_convolution,
  /// dt^a = a t^(a-1) dt, giving r a t / Gamma(2-a).
  differential_substitution,
};

std::string_view to_string(ArgInterpretation interp) noexcept;
/// Accepts "jumarie" / "jumarie_convolution" / "substitution" / "differential_substitution".
ArgInterpretation parse_interpretation(std::string_view name);

/// u0 / (u0 + (1 - u0) exp(-k t)).
double classical_logistic(double k, double u0, double t);

/// Mittag-Leffler argument for a rate factor already raised as the model
/// prescribes (k^alpha for the logistic equation, N beta for SI, ...).
double ml_argument(double rate_factor, double alpha, ArgInterpretation interp, double t);

/// ml_argument with rate factor k^alpha.
double ml_argument(const LogisticProblem& problem, ArgInterpretation interp, double t);

/// u(t) = 1 / (1 + ((1 - u0) / u0) / E_alpha(arg(t))).
double paper_closed_form(const LogisticProblem& problem, ArgInterpretation interp, double t,
                         const SeriesControl& ctrl = {});

/// West's series sum_n ((u0 - 1) / u0)^n E_alpha(-n k^alpha t^alpha).
///
/// Requires u0 > 1/2 so that the ratio has magnitude below one; otherwise
/// Error(convergence_domain). Stops once |term| < tol |sum| on two
/// consecutive terms; precision_flag is degraded if any E_alpha evaluation was.
MLValue west_series(const LogisticProblem& problem, double t, const SeriesControl& ctrl = {});

struct CandidateResult {
  std::string name;
  SolutionCurve curve;
  ResidualReport residual;
};

struct CandidateComparison {
  LogisticProblem problem;
  std::vector<CandidateResult> candidates;
  /// deviation[i][j] = max over nodes |candidates[i] - candidates[j]|
  std::vector<std::vector<double>> deviation;
};

/// Tabulates the closed form under both interpretations, West's series (only
/// when u0 > 1/2), and the FABM numerical reference on one grid.
CandidateComparison compare_candidates(const LogisticProblem& problem, const TimeGrid& grid,
                                       const SeriesControl& ctrl = {}, const FabmOptions& fabm = {},
                                       const ResidualOptions& residual = {});

}  // namespace fraclog
