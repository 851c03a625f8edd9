#include "mfcc/oscillator.hpp"

#include <cmath>

#include "mfcc/error.hpp"

namespace mfcc {

namespace {

double real_value(const ComplexFn& g, double x) {
  const double v = g(complex(x, 0.0)).real();
  if (!std::isfinite(v)) throw Error(ErrorCode::evaluation, "oscillator is not finite");
  return v;
}

bool finite(complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

double complex_step_derivative(const ComplexFn& phi, double x) {
  const complex v = phi(complex(x, complex_step));
  const double d = v.imag() / complex_step;
  if (!std::isfinite(d)) throw Error(ErrorCode::evaluation, "complex-step derivative is not finite");
  return d;
}

double oscillator_derivative(const OscProblem& problem, double x) {
  if (problem.gprime) {
    const double d = (*problem.gprime)(x);
    if (!std::isfinite(d)) throw Error(ErrorCode::evaluation, "user derivative is not finite");
    return d;
  }
  return complex_step_derivative(problem.g, x);
}

PanelTransform panel_transform(const ComplexFn& g, double a, double b, double k) {
  if (!(a < b)) throw Error(ErrorCode::invalid_interval, "panel requires a < b");
  PanelTransform t;
  t.a = a;
  t.b = b;
  t.ga = real_value(g, a);
  t.gb = real_value(g, b);
  if (!(t.ga < t.gb)) {
    throw Error(ErrorCode::not_increasing, "g(a) >= g(b); normalize the orientation first");
  }
  t.c = 0.5 * (t.gb + t.ga);
  t.l = 0.5 * (t.gb - t.ga);
  t.ktilde = t.l * k;
  return t;
}

NodeImages node_images(const ComplexFn& g, const PanelTransform& t, std::span<const double> u) {
  if (u.size() < 2 || u.front() != -1.0 || u.back() != 1.0) {
    throw Error(ErrorCode::invalid_nodes, "reference nodes must run from -1 to 1");
  }
  NodeImages out{std::vector<double>(u.begin(), u.end()), std::vector<double>(u.size()), 0.0};
  const double xc = 0.5 * (t.a + t.b);
  const double xl = 0.5 * (t.b - t.a);
  const std::size_t last = u.size() - 1;
  out.d[0] = -1.0;
  out.d[last] = 1.0;
  for (std::size_t j = 1; j < last; ++j) {
    if (!(u[j] > u[j - 1])) throw Error(ErrorCode::invalid_nodes, "reference nodes not increasing");
    out.d[j] = (real_value(g, xc + xl * u[j]) - t.c) / t.l;
  }
  for (std::size_t j = 1; j <= last; ++j) {
    const double gap = out.d[j] - out.d[j - 1];
    if (!(gap > 0.0)) {
      throw Error(ErrorCode::oscillator_not_monotone, "node images are not strictly increasing");
    }
    out.lambda = std::max(out.lambda, gap);
  }
  return out;
}

NodeImages node_images(const ComplexFn& g, double a, double b, std::span<const double> u) {
  return node_images(g, panel_transform(g, a, b, 1.0), u);
}

complex sigma_eval(const OscProblem& problem, double x, std::optional<double> slope_scale) {
  const double gp = oscillator_derivative(problem, x);
  if (slope_scale) {
    if (std::abs(gp) < eps_stat * (1.0 + std::abs(*slope_scale))) {
      throw Error(ErrorCode::stationary_point, "g' vanishes at x = " + std::to_string(x));
    }
  } else if (gp == 0.0) {
    throw Error(ErrorCode::stationary_point, "g' is zero at x = " + std::to_string(x));
  }
  const complex fv = problem.f(complex(x, 0.0));
  if (!finite(fv)) throw Error(ErrorCode::evaluation, "amplitude is not finite");
  return fv / gp;
}

OrientedProblem normalize_orientation(const OscProblem& problem) {
  if (!(problem.a < problem.b)) throw Error(ErrorCode::invalid_interval, "requires a < b");
  constexpr int samples = 64;
  std::vector<double> gv(samples + 1);
  for (int i = 0; i <= samples; ++i) {
    const double x = (i == samples) ? problem.b
                                    : problem.a + (problem.b - problem.a) * i / double(samples);
    gv[static_cast<std::size_t>(i)] = real_value(problem.g, x);
  }
  bool increasing = true, decreasing = true;
  for (std::size_t i = 1; i < gv.size(); ++i) {
    increasing = increasing && gv[i] > gv[i - 1];
    decreasing = decreasing && gv[i] < gv[i - 1];
  }
  if (increasing) return {problem, Postprocess::identity};
  if (!decreasing) {
    throw Error(ErrorCode::split_required, "g is not monotone on [a, b]; split at stationary points");
  }
  OscProblem flipped = problem;
  flipped.g = [g = problem.g](complex z) { return -g(z); };
  flipped.f = [f = problem.f](complex z) { return std::conj(f(std::conj(z))); };
  if (problem.gprime) flipped.gprime = [gp = *problem.gprime](double x) { return -gp(x); };
  return {std::move(flipped), Postprocess::conjugate};
}

OscProblem reflect(const OscProblem& problem) {
  OscProblem r = problem;
  const double s = problem.a + problem.b;
  r.f = [f = problem.f, s](complex z) { return f(s - z); };
  r.g = [g = problem.g, s](complex z) { return g(s - z); };
  if (problem.gprime) r.gprime = [gp = *problem.gprime, s](double x) { return -gp(s - x); };
  return r;
}

complex apply_postprocess(Postprocess post, complex value) {
  return post == Postprocess::conjugate ? std::conj(value) : value;
}

}  // namespace mfcc
