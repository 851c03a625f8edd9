#pragma once

#include <cmath>
#include <complex>
#include <random>

#include <mfcc/mfcc.hpp>

namespace mfcc::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611u);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

// f = x^4.5/(1+x^2), g = sqrt(x^2+3x+4) on [0,1]
inline OscProblem table1_problem(double k = 100.0) {
  return {[](complex x) { return std::pow(x, 4.5) / (1.0 + x * x); },
          [](complex x) { return std::sqrt(x * x + 3.0 * x + 4.0); }, 0.0, 1.0, k, std::nullopt};
}

// f = (x-1)/(1+x^2), g = sqrt(x^2+3x+4) on [-1,1]
inline OscProblem table2_problem(double k = 100.0) {
  return {[](complex x) { return (x - 1.0) / (1.0 + x * x); },
          [](complex x) { return std::sqrt(x * x + 3.0 * x + 4.0); }, -1.0, 1.0, k, std::nullopt};
}

// f = (x-1)/(1+x^2), g = x^4 on [0,1]
inline OscProblem table3_problem(double k = 1000.0) {
  return {[](complex x) { return (x - 1.0) / (1.0 + x * x); },
          [](complex x) { return x * x * x * x; }, 0.0, 1.0, k, std::nullopt};
}

inline OracleConfig tight_oracle() {
  OracleConfig c;
  c.target_tol = 1e-15;
  return c;
}

}  // namespace mfcc::test
