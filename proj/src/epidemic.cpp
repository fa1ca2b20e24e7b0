#include "fraclog/epidemic.hpp"

#include <cmath>
#include <string>

#include "fraclog/error.hpp"

namespace fraclog {

namespace {

EpidemicState logistic_shape(const EpidemicProblem& p, double capacity, ArgInterpretation interp, double t,
                             const EpidemicOptions& opts) {
  const double rate = opts.alpha_exponent ? std::pow(capacity * p.beta_contact, p.alpha)
                                          : capacity * p.beta_contact;
  const double e = ml_eval(p.alpha, ml_argument(rate, p.alpha, interp, t), opts.series).value;
  const double infected = std::isinf(e) ? capacity : capacity / (1.0 + ((capacity - p.I0) / p.I0) / e);
  return {infected, p.N - infected};
}

double checked_endemic_level(const EpidemicProblem& p) {
  const double a = p.endemic_level();
  if (!(a > 0.0)) {
    throw Error(ErrorKind::degenerate_model,
                "endemic level A = N - lambda/beta = " + std::to_string(a) +
                    " is not positive; the infection dies out and the SIS closed form has no endemic state");
  }
  return a;
}

}  // namespace

void EpidemicProblem::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::validation, "alpha must lie in (0, 1], got " + std::to_string(alpha));
  }
  if (!(N > 0.0) || !std::isfinite(N)) throw Error(ErrorKind::validation, "N must be > 0");
  if (!(beta_contact > 0.0) || !std::isfinite(beta_contact)) {
    throw Error(ErrorKind::validation, "beta (contact rate) must be > 0");
  }
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw Error(ErrorKind::validation, "lambda must be >= 0");
  if (!(I0 > 0.0 && I0 < N)) {
    throw Error(ErrorKind::validation, "I0 must lie strictly between 0 and N, got " + std::to_string(I0));
  }
}

std::string_view to_string(EpidemicModel model) noexcept { return model == EpidemicModel::si ? "si" : "sis"; }

EpidemicModel parse_epidemic_model(std::string_view name) {
  if (name == "si") return EpidemicModel::si;
  if (name == "sis") return EpidemicModel::sis;
  throw Error(ErrorKind::validation, "unknown epidemic model '" + std::string(name) + "' (si|sis)");
}

EpidemicState si_closed_form(const EpidemicProblem& problem, ArgInterpretation interp, double t,
                             const EpidemicOptions& opts) {
  problem.validate();
  return logistic_shape(problem, problem.N, interp, t, opts);
}

EpidemicState sis_closed_form(const EpidemicProblem& problem, ArgInterpretation interp, double t,
                              const EpidemicOptions& opts) {
  problem.validate();
  return logistic_shape(problem, checked_endemic_level(problem), interp, t, opts);
}

EpidemicState closed_form(const EpidemicProblem& problem, EpidemicModel model, ArgInterpretation interp,
                          double t, const EpidemicOptions& opts) {
  return model == EpidemicModel::si ? si_closed_form(problem, interp, t, opts)
                                    : sis_closed_form(problem, interp, t, opts);
}

RhsSpec epidemic_rhs(const EpidemicProblem& problem, EpidemicModel model, const EpidemicOptions& opts) {
  problem.validate();
  if (model == EpidemicModel::si) return RhsSpec::si(problem.N, problem.beta_contact, opts.alpha_exponent);
  return RhsSpec::sis(checked_endemic_level(problem), problem.beta_contact, opts.alpha_exponent);
}

SolutionCurve epidemic_fabm_reference(const EpidemicProblem& problem, EpidemicModel model, const TimeGrid& grid,
                                      const EpidemicOptions& opts, const FabmOptions& fabm) {
  return fabm_solve(epidemic_rhs(problem, model, opts), problem.alpha, problem.I0, grid, fabm);
}

}  // namespace fraclog
