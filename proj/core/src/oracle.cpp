#include "mfcc/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "mfcc/chebyshev.hpp"
#include "mfcc/error.hpp"
#include "mfcc/gauss_legendre.hpp"

namespace mfcc {

namespace {

using lcomplex = std::complex<long double>;

double total_variation(const ComplexFn& g, double a, double b) {
  constexpr int samples = 2048;
  double tv = 0.0;
  double prev = g(complex(a, 0.0)).real();
  for (int i = 1; i <= samples; ++i) {
    const double x = i == samples ? b : a + (b - a) * i / double(samples);
    const double v = g(complex(x, 0.0)).real();
    if (!std::isfinite(v)) throw Error(ErrorCode::evaluation, "oracle: g is not finite");
    tv += std::abs(v - prev);
    prev = v;
  }
  return tv;
}

lcomplex composite(const ComplexFn& f, const ComplexFn& g, double a, double b, double k,
                   const GaussRule& rule, std::size_t panels) {
  lcomplex sum = 0.0L;
  const double width = b - a, count = static_cast<double>(panels);
  double lo = a;
  for (std::size_t p = 0; p < panels; ++p) {
    const double hi = p + 1 == panels ? b : a + width * (static_cast<double>(p + 1) / count);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    lcomplex part = 0.0L;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = mid + half * rule.nodes[i];
      const complex fv = f(complex(x, 0.0));
      const double gv = g(complex(x, 0.0)).real();
      if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag()) || !std::isfinite(gv)) {
        throw Error(ErrorCode::evaluation, "oracle: integrand is not finite");
      }
      const complex term = fv * std::polar(1.0, k * gv);
      part += static_cast<long double>(rule.weights[i]) * lcomplex(term.real(), term.imag());
    }
    sum += static_cast<long double>(half) * part;
    lo = hi;
  }
  return sum;
}

}  // namespace

OracleResult oracle_run(const ComplexFn& f, const ComplexFn& g, double a, double b, double k,
                        const OracleConfig& cfg) {
  if (!(cfg.target_tol >= 1e-15)) throw Error(ErrorCode::invalid_parameter, "oracle tolerance below 1e-15");
  if (cfg.gauss_order < 8) throw Error(ErrorCode::invalid_parameter, "oracle needs gauss_order >= 8");
  if (!(cfg.phase_budget > 0.0)) throw Error(ErrorCode::invalid_parameter, "phase budget must be positive");
  if (!(a < b)) throw Error(ErrorCode::invalid_interval, "oracle requires a < b");
  if (!std::isfinite(k)) throw Error(ErrorCode::invalid_parameter, "oracle requires finite k");

  const GaussRule& rule = gauss_legendre(cfg.gauss_order);
  const double phase = std::abs(k) * total_variation(g, a, b) / cfg.phase_budget;
  std::size_t panels = std::max<std::size_t>(cfg.min_panels, 1);
  if (phase > static_cast<double>(panels)) panels = static_cast<std::size_t>(std::ceil(phase));
  if (panels > cfg.max_panels) throw Error(ErrorCode::oracle_failure, "oracle: initial panel count exceeds max_panels");

  OracleResult out;
  lcomplex coarse = composite(f, g, a, b, k, rule, panels);
  out.evals = panels * rule.nodes.size();
  while (true) {
    const std::size_t finer = 2 * panels;
    if (finer > cfg.max_panels) {
      throw Error(ErrorCode::oracle_failure, "oracle: no convergence within max_panels");
    }
    const lcomplex fine = composite(f, g, a, b, k, rule, finer);
    out.evals += finer * rule.nodes.size();
    const double diff = static_cast<double>(std::abs(fine - coarse));
    out.differences.push_back(diff);
    panels = finer;
    coarse = fine;
    const double mag = static_cast<double>(std::abs(fine));
    if (diff <= cfg.target_tol * (1.0 + mag)) break;
  }
  out.value = complex(static_cast<double>(coarse.real()), static_cast<double>(coarse.imag()));
  out.panels = panels;
  return out;
}

complex oracle_integrate(const ComplexFn& f, const ComplexFn& g, double a, double b, double k,
                         const OracleConfig& cfg) {
  return oracle_run(f, g, a, b, k, cfg).value;
}

complex oracle_integrate(const OscProblem& problem, const OracleConfig& cfg) {
  return oracle_integrate(problem.f, problem.g, problem.a, problem.b, problem.k, cfg);
}

complex oracle_cheb_moment(std::size_t n, double ktilde, const OracleConfig& cfg) {
  if (!(ktilde > 0.0)) throw Error(ErrorCode::invalid_parameter, "oracle moment requires ktilde > 0");
  const ComplexFn f = [n](complex z) { return complex(chebyshev_t(n, z.real()), 0.0); };
  const ComplexFn g = [](complex z) { return z; };
  OracleConfig c = cfg;
  c.min_panels = std::max(c.min_panels, n + 1);
  return oracle_run(f, g, -1.0, 1.0, ktilde, c).value;
}

}  // namespace mfcc
