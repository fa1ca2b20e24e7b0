#pragma once

#include <string_view>

#include "fraclog/fractional.hpp"
#include "fraclog/logistic.hpp"
#include "fraclog/mlcore.hpp"

namespace fraclog {

/// Fractional SI / SIS model D^alpha I = beta I (C - I) with C = N (SI) or
/// C = A = N - lambda / beta (SIS).
struct EpidemicProblem {
  double alpha = 1.0;         ///< 0 < alpha <= 1
  double N = 1.0;             ///< total population, > 0
  double beta_contact = 1.0;  ///< contact rate per individual per time, > 0
  double lambda = 0.0;        ///< recovery rate (SIS only), >= 0
  double I0 = 0.5;            ///< initial infected, 0 < I0 < N

  void validate() const;
  /// N - lambda / beta_contact.
  double endemic_level() const noexcept { return N - lambda / beta_contact; }
};

enum class EpidemicModel { si, sis };
std::string_view to_string(EpidemicModel model) noexcept;
EpidemicModel parse_epidemic_model(std::string_view name);

struct EpidemicOptions {
  /// false: rate factor C beta exactly as in the closed forms; true: (C beta)^alpha,
  /// mirroring the k^alpha of the logistic equation. Applied to the closed form
  /// and the FABM right-hand side alike.
  bool alpha_exponent = false;
  SeriesControl series{};
};

struct EpidemicState {
  double infected = 0.0;
  double susceptible = 0.0;  ///< N - infected
};

/// I = N / (1 + ((N - I0) / I0) / E_alpha(arg)), arg from ml_argument with rate N beta.
EpidemicState si_closed_form(const EpidemicProblem& problem, ArgInterpretation interp, double t,
                             const EpidemicOptions& opts = {});

/// The SI formula with A = N - lambda / beta in place of N.
/// Error(degenerate_model) when A <= 0. I0 >= A is allowed and decays toward A.
EpidemicState sis_closed_form(const EpidemicProblem& problem, ArgInterpretation interp, double t,
                              const EpidemicOptions& opts = {});

EpidemicState closed_form(const EpidemicProblem& problem, EpidemicModel model, ArgInterpretation interp,
                          double t, const EpidemicOptions& opts = {});

/// Right-hand side beta I (C - I) for the chosen model.
RhsSpec epidemic_rhs(const EpidemicProblem& problem, EpidemicModel model, const EpidemicOptions& opts = {});

/// fabm_solve on the SI / SIS right-hand side.
SolutionCurve epidemic_fabm_reference(const EpidemicProblem& problem, EpidemicModel model, const TimeGrid& grid,
                                      const EpidemicOptions& opts = {}, const FabmOptions& fabm = {});

}  // namespace fraclog
