#pragma once

// Internal building blocks of the Mittag-Leffler evaluator, shared with the
// inverse solver (which needs the raw partial sums as bounds).

#include "fraclog/mlcore.hpp"

namespace fraclog::detail {

struct SeriesSum {
  double sum = 0.0;
  double max_abs_term = 0.0;
  double last_abs_term = 0.0;
  int terms = 0;
  bool converged = false;
};

/// Partial sum of the power series of E_{alpha,beta} (order 0) or of its
/// termwise derivative (order 1).
SeriesSum taylor_sum(double alpha, double beta, double z, int order, const SeriesControl& ctrl);

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x) noexcept;

}  // namespace fraclog::detail
