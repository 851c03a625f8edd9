#include "mfcc/fcc_rule.hpp"

#include <cmath>

#include "mfcc/error.hpp"

namespace mfcc {

FccRule make_fcc_rule(std::size_t N, double ktilde) {
  if (N == 0) throw Error(ErrorCode::invalid_parameter, "FCC rule requires N >= 1");
  if (!std::isfinite(ktilde) || ktilde < 0.0) {
    throw Error(ErrorCode::invalid_parameter, "FCC rule requires a finite ktilde >= 0");
  }
  FccRule rule;
  rule.order = N;
  rule.ktilde = ktilde;
  rule.nodes = cc_nodes(N);
  if (ktilde < k_min) {
    rule.folded = true;
    const auto plain = cc_plain_weights(N);
    rule.weights = FccWeights{ktilde, N, std::vector<complex>(plain.begin(), plain.end()), {}};
  } else {
    rule.weights = fcc_weights(N, ktilde);
  }
  return rule;
}

complex fcc_apply(const FccRule& rule, std::span<const complex> values) {
  const std::size_t N = rule.order;
  if (values.size() != N + 1) {
    throw Error(ErrorCode::invalid_parameter, "fcc_apply: expected N+1 values");
  }
  ChebCoeffs coeffs;
  if (rule.folded) {
    std::vector<complex> v(values.begin(), values.end());
    for (std::size_t j = 0; j <= N; ++j) v[j] *= std::exp(complex(0.0, rule.ktilde * rule.nodes.nodes[j]));
    coeffs = cheb_coeffs(std::span<const complex>(v));
  } else {
    coeffs = cheb_coeffs(values);
  }
  const auto& omega = rule.weights.omega;
  complex sum = 0.5 * coeffs.alpha[0] * omega[0];
  for (std::size_t n = 1; n < N; ++n) sum += coeffs.alpha[n] * omega[n];
  sum += 0.5 * coeffs.alpha[N] * omega[N];
  return sum;
}

complex fcc_integrate_affine(const ComplexFn& f, double a, double b, double k, std::size_t N) {
  if (!(a < b)) throw Error(ErrorCode::invalid_interval, "fcc_integrate_affine requires a < b");
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw Error(ErrorCode::invalid_parameter, "fcc_integrate_affine requires finite k >= 0");
  }
  const double c = 0.5 * (b + a);
  const double l = 0.5 * (b - a);
  const FccRule rule = make_fcc_rule(N, l * k);
  std::vector<complex> values(N + 1);
  for (std::size_t j = 0; j <= N; ++j) {
    values[j] = f(complex(c + l * rule.nodes.nodes[j], 0.0));
    if (!std::isfinite(values[j].real()) || !std::isfinite(values[j].imag())) {
      throw Error(ErrorCode::evaluation, "amplitude is not finite at a quadrature node");
    }
  }
  return l * std::exp(complex(0.0, k * c)) * fcc_apply(rule, values);
}

}  // namespace mfcc
