#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "mfcc/chebyshev.hpp"
#include "mfcc/function.hpp"
#include "mfcc/moments.hpp"

namespace mfcc {

/// N-point Filon-Clenshaw-Curtis rule for int_{-1}^{1} f(x) exp(i ktilde x) dx.
///
/// When ktilde < k_min the rule carries plain Clenshaw-Curtis weights and
/// multiplies the samples by exp(i ktilde t_j) before the transform
/// (`folded` is then true). A rule is immutable and may be shared.
struct FccRule {
  std::size_t order = 0;
  double ktilde = 0.0;
  bool folded = false;
  FccWeights weights;  // omega_n, or the plain weights as complex values when folded
  ChebNodes nodes;
};

FccRule make_fcc_rule(std::size_t N, double ktilde);

/// sum''_n alpha_n(values) omega_n, summed in ascending n.
/// Throws invalid_parameter if values.size() != N + 1.
complex fcc_apply(const FccRule& rule, std::span<const complex> values);

/// int_a^b f(x) exp(i k x) dx by the N-point rule after the affine map
/// x = c + l t. Throws invalid_interval if a >= b.
complex fcc_integrate_affine(const ComplexFn& f, double a, double b, double k, std::size_t N);

}  // namespace mfcc
