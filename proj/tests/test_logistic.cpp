#include <cmath>

#include "doctest.h"
#include "fraclog/error.hpp"
#include "fraclog/logistic.hpp"

using namespace fraclog;

namespace {
ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected fraclog::Error");
  return ErrorKind::validation;
}
constexpr auto kJumarie = ArgInterpretation::jumarie_convolution;
constexpr auto kSubst = ArgInterpretation::differential_substitution;
}  // namespace

TEST_CASE("classical logistic") {
  CHECK(classical_logistic(1.0, 0.1, 1.0) == doctest::Approx(0.231969316684).epsilon(1e-11));
  CHECK(classical_logistic(2.0, 0.3, 0.0) == 0.3);
  CHECK(classical_logistic(1.0, 0.5, 50.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("Mittag-Leffler argument under both readings") {
  const double sqrt_pi = std::sqrt(std::acos(-1.0));
  CHECK(ml_argument(1.0, 0.5, kJumarie, 2.0) == doctest::Approx(sqrt_pi).epsilon(1e-14));
  CHECK(ml_argument(1.0, 0.5, kSubst, 2.0) == doctest::Approx(2.0 / sqrt_pi).epsilon(1e-14));
  CHECK(ml_argument(3.0, 1.0, kJumarie, 2.0) == 6.0);
  CHECK(ml_argument(3.0, 1.0, kSubst, 2.0) == 6.0);
  const LogisticProblem p{0.5, 4.0, 0.3};
  CHECK(ml_argument(p, kJumarie, 1.0) == doctest::Approx(2.0 * sqrt_pi / 2.0).epsilon(1e-14));
  CHECK(kind_of([] { ml_argument(1.0, 0.5, kJumarie, -1.0); }) == ErrorKind::domain);
}

TEST_CASE("interpretation names") {
  CHECK(parse_interpretation("jumarie") == kJumarie);
  CHECK(parse_interpretation("substitution") == kSubst);
  CHECK(to_string(kSubst) == "substitution");
  CHECK(kind_of([] { parse_interpretation("riemann"); }) == ErrorKind::validation);
}

TEST_CASE("closed form initial value and classical limit") {
  for (double a : {0.3, 0.7, 1.0}) {
    const LogisticProblem p{a, 1.0, 0.2};
    CHECK(paper_closed_form(p, kJumarie, 0.0) == doctest::Approx(0.2).epsilon(1e-15));
  }
  const LogisticProblem p{1.0, 1.5, 0.1};
  for (double t = 0.0; t <= 20.0; t += 0.25) {
    CHECK(paper_closed_form(p, kJumarie, t) == doctest::Approx(classical_logistic(1.5, 0.1, t)).epsilon(1e-12));
    CHECK(paper_closed_form(p, kSubst, t) == doctest::Approx(classical_logistic(1.5, 0.1, t)).epsilon(1e-12));
  }
}

TEST_CASE("closed form is increasing and bounded for u0 < 1") {
  const LogisticProblem p{0.5, 1.0, 0.3};
  double prev = 0.3;
  for (double t = 0.5; t <= 10.0; t += 0.5) {
    const double u = paper_closed_form(p, kSubst, t);
    CHECK(u > prev);
    CHECK(u < 1.0);
    prev = u;
  }
}

TEST_CASE("problem validation") {
  CHECK(kind_of([] { LogisticProblem{0.0, 1.0, 0.5}.validate(); }) == ErrorKind::validation);
  CHECK(kind_of([] { LogisticProblem{0.5, -1.0, 0.5}.validate(); }) == ErrorKind::validation);
  CHECK(kind_of([] { LogisticProblem{0.5, 1.0, 1.0}.validate(); }) == ErrorKind::validation);
  CHECK(kind_of([] { LogisticProblem{0.5, 1.0, 0.0}.validate(); }) == ErrorKind::validation);
}

TEST_CASE("West series") {
  for (double u0 : {0.6, 0.75, 0.9}) {
    const LogisticProblem p{1.0, 1.0, u0};
    CHECK(west_series(p, 0.0).value == u0);
    for (double t = 0.1; t <= 10.0; t += 0.7) {
      CHECK(west_series(p, t).value == doctest::Approx(classical_logistic(1.0, u0, t)).epsilon(1e-9));
    }
  }
  const MLValue v = west_series(LogisticProblem{0.5, 1.0, 0.9}, 2.0);
  CHECK(v.precision_flag == Precision::ok);
  CHECK(v.value > 0.9);
  CHECK(v.value < 1.0);
  CHECK(kind_of([] { west_series(LogisticProblem{0.5, 1.0, 0.5}, 1.0); }) == ErrorKind::convergence_domain);
  CHECK(kind_of([] { west_series(LogisticProblem{0.5, 1.0, 0.3}, 1.0); }) == ErrorKind::convergence_domain);
}

TEST_CASE("candidate comparison at alpha = 1") {
  const CandidateComparison cmp = compare_candidates(LogisticProblem{1.0, 1.0, 0.9}, TimeGrid(10.0, 500));
  REQUIRE(cmp.candidates.size() == 4);
  CHECK(cmp.candidates[0].name == "paper_jumarie");
  CHECK(cmp.candidates[2].name == "west");
  CHECK(cmp.candidates[3].name == "fabm");
  for (const auto& row : cmp.deviation) {
    for (double d : row) CHECK(d < 1e-3);
  }
}

TEST_CASE("candidate comparison skips West below u0 = 1/2") {
  const CandidateComparison cmp = compare_candidates(LogisticProblem{0.5, 1.0, 0.4}, TimeGrid(4.0, 200));
  CHECK(cmp.candidates.size() == 3);
  CHECK(cmp.deviation.size() == 3);
}
