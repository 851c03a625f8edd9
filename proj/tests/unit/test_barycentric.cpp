#include <doctest.h>

#include <cmath>
#include <vector>

#include "support.hpp"

using namespace mfcc;

namespace {

std::vector<double> uniform_nodes(std::size_t n) {
  std::vector<double> d(n + 1);
  for (std::size_t j = 0; j <= n; ++j) d[j] = -1.0 + 2.0 * double(j) / double(n);
  d.back() = 1.0;
  return d;
}

// Plain Lagrange form on the given window.
complex lagrange(const std::vector<double>& d, const std::vector<complex>& v, std::size_t j0,
                 std::size_t s, double x) {
  complex sum = 0.0;
  for (std::size_t i = j0; i < j0 + s; ++i) {
    double basis = 1.0;
    for (std::size_t m = j0; m < j0 + s; ++m) {
      if (m != i) basis *= (x - d[m]) / (d[i] - d[m]);
    }
    sum += basis * v[i];
  }
  return sum;
}

}  // namespace

TEST_CASE("bary_weights examples") {
  const std::vector<double> two{-1.0, 1.0};
  const auto w2 = bary_weights(two);
  CHECK(w2[0] == -0.5);
  CHECK(w2[1] == 0.5);
  const std::vector<double> three{-1.0, 0.0, 1.0};
  const auto w3 = bary_weights(three);
  CHECK(w3[0] == 0.5);
  CHECK(w3[1] == -1.0);
  CHECK(w3[2] == 0.5);
  const auto w5 = bary_weights(uniform_nodes(4));
  const double binom[] = {1, -4, 6, -4, 1};
  for (int j = 0; j < 5; ++j) CHECK(w5[j] / w5[0] == doctest::Approx(binom[j]));
  const std::vector<double> dup{-1.0, 0.0, 0.0, 1.0};
  try {
    bary_weights(dup);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_nodes);
  }
}

TEST_CASE("bary_eval_full examples") {
  const std::vector<double> d{-1.0, -0.2, 0.4, 1.0};
  std::vector<complex> v;
  for (double x : d) v.emplace_back(3.0 * x - 2.0);
  const BarySet set = make_bary_set(d, v);
  CHECK(std::abs(bary_eval_full(set, 0.37) - (3.0 * 0.37 - 2.0)) < 1e-15);
  CHECK(bary_eval_full(set, d[2]) == v[2]);
  CHECK_THROWS_AS(bary_eval_full(set, 1.1), Error);

  const auto cheb = cc_nodes_ascending(8);
  std::vector<complex> ex;
  for (double x : cheb) ex.emplace_back(std::exp(x));
  const complex bary = bary_eval_full(make_bary_set(cheb, ex), 0.1);
  CHECK(std::abs(bary - std::exp(0.1)) <= 5e-8);
  CHECK(std::abs(bary - cheb_interp_eval(cheb_coeffs(std::vector<complex>(ex.rbegin(), ex.rend())), 0.1)) <= 1e-15);
}

TEST_CASE("large node sets stay finite") {
  const auto d = cc_nodes_ascending(800);
  std::vector<complex> v;
  for (double x : d) v.emplace_back(std::cos(5 * x));
  const BarySet set = make_bary_set(d, v);
  for (double w : set.w) CHECK(std::isfinite(w));
  for (double w : set.w) CHECK(w != 0.0);
  CHECK(std::abs(bary_eval_full(set, 0.123) - std::cos(0.615)) <= 1e-12);
}

TEST_CASE("select_tube clamping and tie-break") {
  const auto d = uniform_nodes(10);
  CHECK(select_tube(d, -1.0, 3).j == 0);
  CHECK(select_tube(d, 1.0, 3).j == 10 - 3 + 1);
  CHECK(select_tube(d, 0.1, 4).j == 4);
  // Dyadic nodes: x = 0 is node 4 and the windows starting at 2 and 3 are
  // equally centered.
  const auto dy = uniform_nodes(8);
  CHECK(select_tube(dy, 0.0, 4).j == 2);
  CHECK(select_tube(dy, 0.0, 3).j == 3);
  CHECK_THROWS_AS(select_tube(d, 0.0, 12), Error);
  CHECK_THROWS_AS(select_tube(d, 0.0, 1), Error);
  CHECK_NOTHROW(select_tube(d, 0.0, 11));
  for (int i = 0; i < 500; ++i) {
    const double x = test::uniform(-1.0, 1.0);
    for (std::size_t s : {2u, 3u, 5u}) {
      const auto t = select_tube(d, x, s);
      CHECK(d[t.j] <= x);
      CHECK(x <= d[t.j + s - 1]);
    }
  }
}

TEST_CASE("local degree reproduction") {
  for (std::size_t s = 2; s <= 6; ++s) {
    std::vector<double> d{-1.0};
    while (d.size() < 40) d.push_back(d.back() + test::uniform(0.01, 0.1));
    const double lo = d.front(), hi = d.back();
    for (auto& x : d) x = -1.0 + 2.0 * (x - lo) / (hi - lo);
    d.back() = 1.0;
    std::vector<double> coef(s);
    for (auto& c : coef) c = test::uniform(-1.0, 1.0);
    auto p = [&](double x) {
      double r = 0.0;
      for (std::size_t i = coef.size(); i-- > 0;) r = r * x + coef[i];
      return r;
    };
    std::vector<complex> v;
    for (double x : d) v.emplace_back(p(x));
    for (int i = 0; i < 200; ++i) {
      const double x = test::uniform(-1.0, 1.0);
      CHECK(std::abs(bary_eval_local(d, v, x, s) - p(x)) <= 1e-12 * 4.0);
    }
  }
}

TEST_CASE("full tube equals full interpolation") {
  const auto d = cc_nodes_ascending(12);
  std::vector<complex> v;
  for (double x : d) v.emplace_back(std::sin(2 * x), x);
  const BarySet set = make_bary_set(d, v);
  for (double x : {-0.93, -0.1, 0.42, 0.99}) {
    CHECK(std::abs(bary_eval_local(d, v, x, 13) - bary_eval_full(set, x)) <= 1e-13);
  }
}

TEST_CASE("Runge function with tubes") {
  auto runge = [](double x) { return 1.0 / (1.0 + 25.0 * x * x); };
  const auto d = uniform_nodes(400);
  std::vector<complex> v;
  for (double x : d) v.emplace_back(runge(x));
  const auto tube = select_tube(d, 0.97, 5);
  CHECK(std::abs(bary_eval_local(d, v, 0.97, 5) - lagrange(d, v, tube.j, 5, 0.97)) <= 1e-13);

  double previous = 1e300, first_ratio = 0.0;
  for (std::size_t n : {50u, 100u, 200u, 400u, 800u}) {
    const auto dn = uniform_nodes(n);
    std::vector<complex> vn;
    for (double x : dn) vn.emplace_back(runge(x));
    double worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      const double x = -1.0 + i / 500.0;
      worst = std::max(worst, std::abs(bary_eval_local(dn, vn, x, 5) - runge(x)));
    }
    CHECK(worst <= 2.0 * previous);
    // Five-point local interpolation: error ~ C lambda^5.
    const double ratio = worst / std::pow(2.0 / double(n), 5.0);
    if (first_ratio == 0.0) first_ratio = ratio;
    CHECK(ratio <= 2.0 * first_ratio);
    previous = worst;
  }
}
