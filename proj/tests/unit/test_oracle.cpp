#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"

using namespace mfcc;
using std::numbers::pi;

namespace {
const ComplexFn one = [](complex) { return complex(1.0); };
const ComplexFn identity = [](complex x) { return x; };
}  // namespace

TEST_CASE("oracle examples") {
  CHECK(std::abs(oracle_integrate(one, identity, 0.0, 1.0, 2.0 * pi)) <= 1e-14);

  const complex fresnel(0.0601125184813444348, 0.0583670899929623342);
  const complex v = oracle_integrate(one, [](complex x) { return x * x; }, 0.0, 1.0, 100.0, test::tight_oracle());
  CHECK(std::abs(v - fresnel) <= 1e-14);

  const complex slow(0.841470865241088587, 0.000381773262053010741);
  const complex w = oracle_integrate([](complex x) { return std::cos(x); }, identity, 0.0, 1.0, 1e-3);
  CHECK(std::abs(w - slow) <= 1e-14);
}

TEST_CASE("oracle doubling") {
  const OscProblem p = test::table1_problem();
  const auto r = oracle_run(p.f, p.g, p.a, p.b, p.k, test::tight_oracle());
  REQUIRE(r.differences.size() >= 1);
  CHECK(r.differences.back() <= 1e-15 * (1.0 + std::abs(r.value)));
  const std::size_t start = r.panels >> r.differences.size();
  CHECK(r.evals == 24 * (2 * r.panels - start));
  OracleConfig coarse;
  coarse.target_tol = 1e-9;
  const complex c = oracle_integrate(p, coarse);
  CHECK(std::abs(c - r.value) <= 1e-9 * (1.0 + std::abs(r.value)));
  OracleConfig more = test::tight_oracle();
  more.min_panels = 4 * r.panels;
  CHECK(std::abs(oracle_integrate(p, more) - r.value) <= 1e-15);
}

TEST_CASE("oracle differences contract") {
  OracleConfig cfg;
  cfg.gauss_order = 8;
  cfg.target_tol = 1e-14;
  cfg.phase_budget = 40.0;
  const auto r = oracle_run([](complex x) { return std::exp(x); }, identity, 0.0, 1.0, 40.0, cfg);
  REQUIRE(r.differences.size() >= 2);
  for (std::size_t i = 1; i < r.differences.size(); ++i) CHECK(r.differences[i] <= r.differences[i - 1] / 2.0);
}

TEST_CASE("oracle moments") {
  CHECK(std::abs(oracle_cheb_moment(0, pi)) <= 1e-14);
  CHECK(std::abs(oracle_cheb_moment(1, pi) - complex(0.0, 2.0 / pi)) <= 1e-14);
  const auto w = fcc_weights(5, 10.0);
  CHECK(std::abs(oracle_cheb_moment(5, 10.0) - w.omega[5]) <= 1e-13);
}

TEST_CASE("oracle errors") {
  OracleConfig bad;
  bad.target_tol = 1e-17;
  CHECK_THROWS_AS(oracle_integrate(one, identity, 0.0, 1.0, 1.0, bad), Error);
  bad = {};
  bad.gauss_order = 4;
  CHECK_THROWS_AS(oracle_integrate(one, identity, 0.0, 1.0, 1.0, bad), Error);
  CHECK_THROWS_AS(oracle_integrate(one, identity, 1.0, 0.0, 1.0), Error);
  OracleConfig tiny;
  tiny.max_panels = 4;
  tiny.target_tol = 1e-15;
  try {
    oracle_integrate([](complex x) { return std::sqrt(x); }, identity, 0.0, 1.0, 50.0, tiny);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::oracle_failure);
  }
  try {
    oracle_integrate([](complex x) { return x / (x - x); }, identity, 0.0, 1.0, 1.0);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::evaluation);
  }
}
