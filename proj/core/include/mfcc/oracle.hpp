#pragma once

#include <cstddef>
#include <vector>

#include "mfcc/function.hpp"
#include "mfcc/oscillator.hpp"

namespace mfcc {

/// Brute-force composite Gauss-Legendre reference for
/// int_a^b f(x) exp(i k g(x)) dx.
struct OracleConfig {
  double target_tol = 1e-13;  // relative to 1 + |I|, must be >= 1e-15
  std::size_t max_panels = std::size_t{1} << 22;
  std::size_t gauss_order = 24;  // >= 8
  double phase_budget = 1.0;     // radians of k*g per starting sub-panel
  std::size_t min_panels = 1;    // lower bound on the starting sub-panel count
};

struct OracleResult {
  complex value = 0.0;
  std::size_t panels = 0;
  std::size_t evals = 0;
  /// |I_{2n} - I_n| for each doubling, in order.
  std::vector<double> differences;
};

/// Starts from max(min_panels, ceil(k * TV(g) / phase_budget)) equal
/// sub-panels (TV sampled)
/// and doubles until two successive values agree to target_tol * (1 + |I|);
/// returns the finer value. Sums are accumulated in long double. Throws
/// oracle_failure when max_panels is reached, invalid_parameter for a bad
/// config, evaluation for non-finite samples.
OracleResult oracle_run(const ComplexFn& f, const ComplexFn& g, double a, double b, double k,
                        const OracleConfig& cfg = {});

complex oracle_integrate(const ComplexFn& f, const ComplexFn& g, double a, double b, double k,
                         const OracleConfig& cfg = {});

complex oracle_integrate(const OscProblem& problem, const OracleConfig& cfg = {});

/// int_{-1}^{1} T_n(x) exp(i ktilde x) dx by oracle_integrate.
complex oracle_cheb_moment(std::size_t n, double ktilde, const OracleConfig& cfg = {});

}  // namespace mfcc
