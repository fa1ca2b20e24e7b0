#include <cmath>
#include <vector>

#include "doctest.h"
#include "fraclog/error.hpp"
#include "fraclog/mllog.hpp"

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
}  // namespace

TEST_CASE("log base E_{1/2}(1) equals e * erfc(-1)") {
  const LogBaseContext ctx = make_log_context(0.5);
  const double expected = std::exp(1.0) * std::erfc(-1.0);
  CHECK(ctx.base_value == doctest::Approx(expected).epsilon(1e-13));
  CHECK(ctx.ln_base == doctest::Approx(std::log(expected)).epsilon(1e-13));
}

TEST_CASE("log at alpha = 1 is the natural logarithm") {
  const LogBaseContext ctx = make_log_context(1.0);
  for (double x : {0.1, 0.5, 2.0, 10.0, 1e6}) CHECK(ml_log(ctx, x) == doctest::Approx(std::log(x)).epsilon(1e-14));
}

TEST_CASE("printed table cells") {
  CHECK(make_log_context(0.3).base_value == doctest::Approx(8.0407).epsilon(5e-5));
  CHECK(ml_log(make_log_context(0.1), 10.0) == doctest::Approx(0.7327).epsilon(1e-4));
  CHECK(ml_log(make_log_context(1.0), 10.0) == doctest::Approx(2.3026).epsilon(1e-4));
  for (double a : {0.1, 0.4, 0.7, 1.0}) CHECK(ml_log(make_log_context(a), 1.0) == 0.0);
}

TEST_CASE("log is strictly increasing") {
  const LogBaseContext ctx = make_log_context(0.2);
  double prev = ml_log(ctx, 0.05);
  for (int i = 2; i <= 200; ++i) {
    const double v = ml_log(ctx, i / 20.0);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("log domain errors") {
  const LogBaseContext ctx = make_log_context(0.5);
  CHECK(kind_of([&] { ml_log(ctx, 0.0); }) == ErrorKind::domain);
  CHECK(kind_of([&] { ml_log(ctx, -2.0); }) == ErrorKind::domain);
  CHECK(kind_of([] { make_log_context(0.0); }) == ErrorKind::domain);
  CHECK(kind_of([] { make_log_context(1.5); }) == ErrorKind::domain);
}

TEST_CASE("inverse round trips") {
  const InverseResult r = ml_inverse(0.5, 5.009);
  CHECK(r.x == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(ml_inverse(1.0, std::exp(1.0)).x == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ml_inverse(1.0, 1.0).x == doctest::Approx(0.0));
  for (double a : {0.1, 0.35, 0.8}) {
    for (double y : {1e-3, 0.2, 1.0, 7.5, 900.0}) {
      const InverseResult inv = ml_inverse(a, y);
      CHECK(std::fabs(ml_eval(a, inv.x).value - y) <= 1e-10 * std::max(1.0, y));
    }
  }
}

TEST_CASE("inverse of small y needs a far negative argument") {
  const InverseResult r = ml_inverse(0.1, 1e-3);
  CHECK(r.x < -100.0);
}

TEST_CASE("inverse errors") {
  CHECK(kind_of([] { ml_inverse(0.5, 0.0); }) == ErrorKind::domain);
  CHECK(kind_of([] { ml_inverse(0.5, -1.0); }) == ErrorKind::domain);
  CHECK(kind_of([] { ml_inverse(1.0, 1e300); }) == ErrorKind::bracket_failure);
  SeriesControl tight;
  tight.z_min = -10.0;
  CHECK(kind_of([&] { ml_inverse(0.5, 1e-6, tight); }) == ErrorKind::bracket_failure);
}

TEST_CASE("product and quotient identities") {
  for (double a : {0.1, 0.5, 0.9}) {
    const PropositionReport r = verify_proposition(a, 0.75, 0.35);
    CHECK(r.product_gap < 1e-14);
    CHECK(r.quotient_gap < 1e-14);
  }
  const PropositionReport r = verify_proposition(0.9, 10.0, 2.0);
  CHECK(r.log_product == doctest::Approx(2.7478).epsilon(1e-4));
  CHECK(r.log_difference == doctest::Approx(1.4763).epsilon(1e-4));
  CHECK(verify_proposition(0.1, 0.2, 1.0).log_quotient == doctest::Approx(-0.5122).epsilon(1e-4));
  CHECK(kind_of([] { verify_proposition(0.5, -1.0, 2.0); }) == ErrorKind::domain);
}
