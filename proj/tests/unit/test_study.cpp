#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <mfcc_cli/study.hpp>

#include "support.hpp"

using namespace mfcc;
using namespace mfcc::cli;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> fields(const std::string& row) {
  std::vector<std::string> out;
  std::istringstream in(row);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  if (!row.empty() && row.back() == ',') out.emplace_back();
  return out;
}

StudySpec parse(const std::string& text) {
  std::istringstream in(text);
  return parse_study_config(in);
}

}  // namespace

TEST_CASE("config parsing") {
  const StudySpec s = parse(
      "# table 2 style\n"
      "method = mfcc2\n"
      "f = (x-1)/(1+x^2)\n"
      "g = sqrt(x^2+3*x+4)\n"
      "a = -1\n b = 1\n"
      "k = 100, 200\n"
      "N = 8,16\n"
      "s = 2, 3\n"
      "Nprime = auto\n"
      "stat_order = 3\n");
  CHECK(s.method == "mfcc2");
  CHECK(s.a == -1.0);
  CHECK(s.k == std::vector<double>{100.0, 200.0});
  CHECK(s.N == std::vector<std::size_t>{8, 16});
  CHECK(s.s == std::vector<std::size_t>{2, 3});
  CHECK(s.Nprime.empty());
  CHECK(s.n_order == std::optional<std::size_t>(3));
  CHECK_NOTHROW(validate(s));
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse("bogus = 1\n"), UsageError);
  CHECK_THROWS_AS(parse("k 100\n"), UsageError);
  CHECK_THROWS_AS(parse("N = -3\n"), UsageError);
  CHECK_THROWS_AS(parse("a = one\n"), UsageError);
  StudySpec s = parse("method = mfcc1\nf = 1\ng = x\nk = 10\nN = 4\n");
  CHECK_THROWS_AS(validate(s), UsageError);
  s.M = {4};
  CHECK_NOTHROW(validate(s));
  s.method = "graded";
  CHECK_THROWS_AS(validate(s), UsageError);
  s.method = "simpson";
  CHECK_THROWS_AS(validate(s), UsageError);
  CHECK_THROWS_AS(table_preset(4), UsageError);
}

TEST_CASE("header matches the golden file") {
  std::ifstream golden(MFCC_TEST_DATA_DIR "/golden/study_header.csv");
  REQUIRE(golden);
  std::string expected;
  std::getline(golden, expected);
  CHECK(expected == csv_header);

  StudySpec s = parse("method = fcc\nf = 1\ng = 2*x+1\na = 0\nb = 1\nk = 10\nN = 6\n");
  std::ostringstream out;
  run_study(s, out);
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == expected);
  const auto cols = fields(rows[1]);
  REQUIRE(cols.size() == 12);
  CHECK(cols[0] == "fcc");
  CHECK(cols[10].empty());
  CHECK(std::stod(cols[9]) <= 1e-15);
}

TEST_CASE("study rates") {
  StudySpec s = table_preset(1);
  s.M = {64, 128};
  s.N = {2};
  std::ostringstream out;
  run_study(s, out);
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == 3);
  CHECK(fields(rows[1])[10].empty());
  CHECK(std::stod(fields(rows[2])[10]) == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("fcc_linear rejects curved oscillators") {
  const OscProblem p = make_problem("1", "x^2", std::nullopt, 0.0, 1.0, 10.0);
  CHECK_THROWS_AS(fcc_linear(p, 8), UsageError);
  const OscProblem d = make_problem("1", "-x", std::nullopt, 0.0, 1.0, 10.0);
  const complex exact = (std::exp(complex(0.0, -10.0)) - 1.0) / complex(0.0, -10.0);
  CHECK(std::abs(fcc_linear(d, 8) - exact) <= 1e-15);
}
