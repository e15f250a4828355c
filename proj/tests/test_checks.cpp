#include <doctest.h>

#include "hida/checks.hpp"
#include "hida/error.hpp"

TEST_CASE("every suite passes on a correct build") {
  for (const auto& suite : hida::suite_names()) {
    const auto report = hida::run_suite(suite, 1, 10);
    CAPTURE(suite);
    CHECK(report.passed());
    CHECK(report.failures.empty());
    CHECK_FALSE(report.invariants.empty());
  }
}

TEST_CASE("reports are deterministic") {
  const auto a = hida::json::dump(hida::to_json(hida::run_suite("all", 5, 5)));
  const auto b = hida::json::dump(hida::to_json(hida::run_suite("all", 5, 5)));
  CHECK(a == b);
}

TEST_CASE("mutations are detected") {
  const auto ccr = hida::run_suite("ccr", 1, 30, hida::Mutation::annihilation_constant);
  CHECK_FALSE(ccr.passed());
  CHECK(ccr.failures_of("ccr") > 0);
  CHECK(ccr.failures_of("adjointness") > 0);
  CHECK_FALSE(ccr.failures.empty());

  const auto sign = hida::run_suite("hochschild", 1, 30, hida::Mutation::coboundary_sign);
  CHECK(sign.failures_of("delta_squared_zero") > 0);
  CHECK(hida::run_suite("ccr", 1, 30, hida::Mutation::coboundary_sign).passed());
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(hida::run_suite("nope", 1, 1), hida::ParseError); }
