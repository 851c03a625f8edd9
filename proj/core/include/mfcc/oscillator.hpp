#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mfcc/function.hpp"

namespace mfcc {

/// Integral of f(x) exp(i k g(x)) over [a, b].
struct OscProblem {
  ComplexFn f;
  ComplexFn g;
  double a = 0.0;
  double b = 1.0;
  double k = 1.0;
  /// Exact g' if the caller has one; the complex step is used otherwise.
  std::optional<RealFn> gprime;
};

/// Step used by complex_step_derivative. No subtraction takes place, so the
/// O(h^2) truncation term is far below double precision.
inline constexpr double complex_step = 1e-100;

/// Relative threshold below which g'(x) counts as a stationary point.
inline constexpr double eps_stat = 1e-12;

/// Im(phi(x + i h)) / h. Throws evaluation if the result is not finite.
double complex_step_derivative(const ComplexFn& phi, double x);

/// g'(x) from the problem's exact derivative when present, else complex step.
double oscillator_derivative(const OscProblem& problem, double x);

/// Affine data of one panel: tau = c + l t maps [-1, 1] onto [g(a), g(b)].
struct PanelTransform {
  double a = 0.0, b = 0.0;
  double ga = 0.0, gb = 0.0;
  double c = 0.0, l = 0.0;
  double ktilde = 0.0;
};

/// Throws invalid_interval if a >= b, not_increasing if g(a) >= g(b).
PanelTransform panel_transform(const ComplexFn& g, double a, double b, double k);

/// Images d_j = (g(a + (b-a)(u_j+1)/2) - c) / l of reference nodes u_j.
struct NodeImages {
  std::vector<double> u;
  std::vector<double> d;
  double lambda = 0.0;  // max_j (d_j - d_{j-1})
};

/// u must be strictly increasing with u.front() == -1 and u.back() == 1.
/// d_0 and d_N' are set to exactly -1 and 1. Throws oscillator_not_monotone
/// if the images are not strictly increasing.
NodeImages node_images(const ComplexFn& g, double a, double b, std::span<const double> u);

/// Same, reusing an already computed transform (avoids re-evaluating g(a), g(b)).
NodeImages node_images(const ComplexFn& g, const PanelTransform& t, std::span<const double> u);

/// sigma_1[f, g](x) = f(x) / g'(x).
///
/// When `slope_scale` is given, |g'(x)| < eps_stat * (1 + slope_scale) is
/// reported as stationary_point; pass std::nullopt to only require a finite,
/// nonzero derivative.
complex sigma_eval(const OscProblem& problem, double x, std::optional<double> slope_scale);

enum class Postprocess { identity, conjugate };

struct OrientedProblem {
  OscProblem problem;
  Postprocess post = Postprocess::identity;
};

/// Makes g increasing. A decreasing g becomes -g with f replaced by
/// conj(f); the original integral is then the conjugate of the new one.
/// Throws split_required if g is not strictly monotone on [a, b] (checked on
/// a sample grid), invalid_interval if a >= b.
OrientedProblem normalize_orientation(const OscProblem& problem);

/// x -> a + b - x. The integral is unchanged; a stationary point at b moves
/// to a.
OscProblem reflect(const OscProblem& problem);

/// Applies a Postprocess to a computed value.
complex apply_postprocess(Postprocess post, complex value);

}  // namespace mfcc
