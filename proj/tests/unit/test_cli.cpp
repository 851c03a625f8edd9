#include <doctest.h>

#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include <mfcc_cli/app.hpp>

#include "support.hpp"

using namespace mfcc;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<const char*> args) {
  args.insert(args.begin(), "mfcc");
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

complex parse_value(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0, im = 0.0;
  in >> re >> im;
  return {re, im};
}

}  // namespace

TEST_CASE("integrate mfcc1") {
  const auto r = run({"integrate", "--method", "mfcc1", "--f", "x^4.5/(1+x^2)", "--g", "sqrt(x^2+3*x+4)", "--a", "0",
                      "--b", "1", "--k", "100", "--M", "256", "--N", "2"});
  REQUIRE(r.code == 0);
  const complex ref = oracle_integrate(test::table1_problem(), test::tight_oracle());
  CHECK(std::abs(parse_value(r.out) - ref) == doctest::Approx(4.6807e-13).epsilon(0.05));
}

TEST_CASE("integrate fcc") {
  const auto r = run({"integrate", "--method", "fcc", "--f", "1", "--g", "x", "--a", "0", "--b", "1", "--k",
                      "6.283185307179586", "--N", "4"});
  REQUIRE(r.code == 0);
  CHECK(std::abs(parse_value(r.out)) <= 1e-14);
}

TEST_CASE("integrate graded") {
  const auto r = run({"integrate", "--method", "graded", "--f", "(x-1)/(1+x^2)", "--g", "x^4", "--a", "0", "--b",
                      "1", "--k", "1000", "--stat-order", "3", "--M", "200", "--N", "6", "--verbose"});
  REQUIRE(r.code == 0);
  const complex ref = oracle_integrate(test::table3_problem(), test::tight_oracle());
  const double err = std::abs(parse_value(r.out) - ref);
  CHECK(err <= 10 * 4.7358e-8);
  CHECK(err >= 4.7358e-8 / 10);
  CHECK(r.err.find("first-panel-zero") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"integrate", "--method", "mfcc1", "--f", "sin(", "--g", "x", "--a", "0", "--b", "1", "--k", "1"}).code == 2);
  CHECK(run({"integrate", "--method", "simpson", "--f", "1", "--g", "x", "--a", "0", "--b", "1", "--k", "1"}).code == 2);
  CHECK(run({"integrate", "--method", "mfcc1", "--f", "1", "--g", "x", "--a", "1", "--b", "0", "--k", "1"}).code == 2);
  CHECK(run({"integrate", "--method", "fcc", "--f", "1", "--g", "x^2", "--a", "0", "--b", "1", "--k", "1"}).code == 2);
  CHECK(run({"integrate", "--method", "graded", "--f", "1", "--g", "x^4", "--a", "0", "--b", "1", "--k", "1"}).code == 2);
  CHECK(run({"study", "--table", "1", "--config", "x.cfg"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const auto split = run({"integrate", "--method", "mfcc1", "--f", "1", "--g", "x^2", "--a", "-1", "--b", "1", "--k", "10"});
  CHECK(split.code == 3);
  CHECK(split.err.find("split") != std::string::npos);
}

TEST_CASE("weights csv") {
  const auto r = run({"weights", "--N", "4", "--k", "2.5"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,re,im");
  const auto w = fcc_weights(4, 2.5);
  int rows = 0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string n, re, im;
    std::getline(row, n, ',');
    std::getline(row, re, ',');
    std::getline(row, im, ',');
    CHECK(std::stoi(n) == rows);
    CHECK(std::stod(re) == w.omega[rows].real());
    CHECK(std::stod(im) == w.omega[rows].imag());
    ++rows;
  }
  CHECK(rows == 5);
}
