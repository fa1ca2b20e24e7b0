#include "fraclog/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "fraclog/compensated_sum.hpp"
#include "fraclog/error.hpp"

namespace fraclog {

void LogisticProblem::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::validation, "alpha must lie in (0, 1], got " + std::to_string(alpha));
  }
  if (!(k > 0.0) || !std::isfinite(k)) throw Error(ErrorKind::validation, "k must be > 0, got " + std::to_string(k));
  if (!(u0 > 0.0 && u0 < 1.0)) {
    throw Error(ErrorKind::validation, "u0 must lie strictly between 0 and 1, got " + std::to_string(u0));
  }
}

std::string_view to_string(ArgInterpretation interp) noexcept {
  return interp == ArgInterpretation::jumarie_convolution ? "jumarie" : "substitution";
}

ArgInterpretation parse_interpretation(std::string_view name) {
  if (name == "jumarie" || name == "jumarie_convolution") return ArgInterpretation::jumarie_convolution;
  if (name == "substitution" || name == "differential_substitution") {
    return ArgInterpretation::differential_substitution;
  }
  throw Error(ErrorKind::validation, "unknown interpretation '" + std::string(name) + "' (jumarie|substitution)");
}

double classical_logistic(double k, double u0, double t) {
  if (!(t >= 0.0)) throw Error(ErrorKind::domain, "time must be >= 0");
  return u0 / (u0 + (1.0 - u0) * std::exp(-k * t));
}

double ml_argument(double rate_factor, double alpha, ArgInterpretation interp, double t) {
  if (!(t >= 0.0)) throw Error(ErrorKind::domain, "time must be >= 0");
  if (alpha == 1.0) return rate_factor * t;
  switch (interp) {
    case ArgInterpretation::jumarie_convolution:
      // (r / Gamma(2-a)) * a B(a, 2-a) t = r Gamma(1+a) t
      return rate_factor * gamma_fn(1.0 + alpha) * t;
    case ArgInterpretation::differential_substitution:
      return rate_factor * alpha * t / gamma_fn(2.0 - alpha);
  }
  return 0.0;
}

double ml_argument(const LogisticProblem& problem, ArgInterpretation interp, double t) {
  return ml_argument(std::pow(problem.k, problem.alpha), problem.alpha, interp, t);
}

double paper_closed_form(const LogisticProblem& problem, ArgInterpretation interp, double t,
                         const SeriesControl& ctrl) {
  problem.validate();
  const double e = ml_eval(problem.alpha, ml_argument(problem, interp, t), ctrl).value;
  const double c = (1.0 - problem.u0) / problem.u0;
  if (std::isinf(e)) return 1.0;
  return 1.0 / (1.0 + c / e);
}

MLValue west_series(const LogisticProblem& problem, double t, const SeriesControl& ctrl) {
  problem.validate();
  if (!(t >= 0.0)) throw Error(ErrorKind::domain, "time must be >= 0");
  if (!(problem.u0 > 0.5)) {
    throw Error(ErrorKind::convergence_domain,
                "West's series needs |(u0-1)/u0| < 1, i.e. u0 > 1/2; got u0=" + std::to_string(problem.u0));
  }
  if (t == 0.0) return {problem.u0, 0.0, 0, Precision::ok, MLRoute::taylor};

  const double ratio = (problem.u0 - 1.0) / problem.u0;
  const double c = std::pow(problem.k * t, problem.alpha);
  CompensatedSum acc(1.0);
  double weight = 1.0;
  double err = 0.0;
  int small = 0;
  MLValue out;
  out.route = MLRoute::taylor;
  for (int n = 1; n < ctrl.max_terms; ++n) {
    weight *= ratio;
    const MLValue e = ml_eval(problem.alpha, -n * c, ctrl);
    if (e.precision_flag == Precision::degraded) out.precision_flag = Precision::degraded;
    const double term = weight * e.value;
    acc += term;
    err += std::fabs(weight) * e.est_error;
    out.terms_used = n + 1;
    if (std::fabs(term) < ctrl.tol * std::fabs(acc.value())) {
      if (++small >= 2) {
        out.value = acc.value();
        out.est_error = err + std::fabs(term);
        return out;
      }
    } else {
      small = 0;
    }
  }
  throw Error(ErrorKind::no_convergence,
              "West's series did not converge within " + std::to_string(ctrl.max_terms) + " terms");
}

CandidateComparison compare_candidates(const LogisticProblem& problem, const TimeGrid& grid,
                                       const SeriesControl& ctrl, const FabmOptions& fabm,
                                       const ResidualOptions& residual) {
  problem.validate();
  const RhsSpec rhs = RhsSpec::logistic(problem.k, true);
  const int nodes = grid.node_count();

  CandidateComparison cmp{problem, {}, {}};
  auto add = [&](std::string name, SolutionCurve curve) {
    ResidualReport rep = residual_meter(curve, rhs, problem.alpha, residual);
    cmp.candidates.push_back({std::move(name), std::move(curve), std::move(rep)});
  };

  for (ArgInterpretation interp :
       {ArgInterpretation::jumarie_convolution, ArgInterpretation::differential_substitution}) {
    SolutionCurve c{grid, std::vector<double>(nodes), 0};
    for (int i = 0; i < nodes; ++i) c.values[i] = paper_closed_form(problem, interp, grid.node(i), ctrl);
    add("paper_" + std::string(to_string(interp)), std::move(c));
  }
  if (problem.u0 > 0.5) {
    SolutionCurve c{grid, std::vector<double>(nodes), 0};
    for (int i = 0; i < nodes; ++i) c.values[i] = west_series(problem, grid.node(i), ctrl).value;
    add("west", std::move(c));
  }
  add("fabm", fabm_solve(rhs, problem.alpha, problem.u0, grid, fabm));

  const std::size_t m = cmp.candidates.size();
  cmp.deviation.assign(m, std::vector<double>(m, 0.0));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      double d = 0.0;
      for (int i = 0; i < nodes; ++i) {
        d = std::max(d, std::fabs(cmp.candidates[a].curve.values[i] - cmp.candidates[b].curve.values[i]));
      }
      cmp.deviation[a][b] = cmp.deviation[b][a] = d;
    }
  }
  return cmp;
}

}  // namespace fraclog
