#include "mfcc/methods.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "mfcc/barycentric.hpp"
#include "mfcc/chebyshev.hpp"
#include "mfcc/error.hpp"
#include "mfcc/fcc_rule.hpp"

namespace mfcc {

namespace {

void add_tag(std::vector<std::string>& tags, const std::string& tag) {
  if (std::find(tags.begin(), tags.end(), tag) == tags.end()) tags.push_back(tag);
}

bool finite(complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_problem(const OscProblem& p) {
  if (!(p.a < p.b)) throw Error(ErrorCode::invalid_interval, "requires a < b");
  if (!(p.k > 0.0) || !std::isfinite(p.k)) {
    throw Error(ErrorCode::invalid_parameter, "requires a finite k > 0");
  }
  if (!p.f || !p.g) throw Error(ErrorCode::invalid_parameter, "f and g must be set");
}

std::vector<double> uniform_reference(std::size_t Nprime) {
  std::vector<double> u(Nprime + 1);
  for (std::size_t j = 0; j <= Nprime; ++j) {
    u[j] = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(Nprime);
  }
  u.front() = -1.0;
  u.back() = 1.0;
  return u;
}

void merge(QuadResult& into, const QuadResult& part) {
  into.value += part.value;
  into.panels_used += part.panels_used;
  into.evals += part.evals;
  into.lambda_max = std::max(into.lambda_max, part.lambda_max);
  for (const auto& t : part.fallbacks) add_tag(into.fallbacks, t);
  for (const auto& w : part.warnings) add_tag(into.warnings, w);
}

// log2 of the growth ratio of g(a + h) - g(a) under halving h; about n+1
// for a stationary point of order n.
std::optional<double> estimate_order(const ComplexFn& g, double a, double b) {
  const double h = (b - a) * 1e-3;
  const double g0 = g(complex(a, 0.0)).real();
  const double d1 = g(complex(a + h, 0.0)).real() - g0;
  const double d2 = g(complex(a + 0.5 * h, 0.0)).real() - g0;
  if (!(d1 > 0.0) || !(d2 > 0.0)) return std::nullopt;
  return std::log2(d1 / d2);
}

// Truncation term of plain Clenshaw-Curtis on exp(i k g) over a panel with
// phase change `phase`, against the relative rounding noise in the node
// images.
bool prefer_direct(double phase, double noise, std::size_t N) {
  return std::pow(phase, static_cast<double>(N + 1)) / std::tgamma(static_cast<double>(N + 2)) <= noise;
}

// Plain Clenshaw-Curtis on f(x) exp(i k g(x)) in x, for panels on which
// g(b) - g(a) is barely resolved in double precision.
complex direct_panel(const OscProblem& p, double a, double b, std::size_t N) {
  const FccRule rule = make_fcc_rule(N, 0.0);
  const double c = 0.5 * (a + b), l = 0.5 * (b - a);
  std::vector<complex> v(N + 1);
  for (std::size_t j = 0; j <= N; ++j) {
    const double x = c + l * rule.nodes.nodes[j];
    v[j] = p.f(complex(x, 0.0)) * std::exp(complex(0.0, p.k * p.g(complex(x, 0.0)).real()));
  }
  return l * fcc_apply(rule, v);
}

}  // namespace

bool QuadResult::has_fallback(std::string_view tag) const {
  return std::find(fallbacks.begin(), fallbacks.end(), tag) != fallbacks.end();
}

MeshSpec uniform_mesh(double a, double b, std::size_t M) {
  if (M == 0) throw Error(ErrorCode::invalid_parameter, "mesh requires M >= 1");
  if (!(a < b)) throw Error(ErrorCode::invalid_interval, "mesh requires a < b");
  MeshSpec mesh{MeshSpec::Kind::uniform, M, 1.0, std::vector<double>(M + 1)};
  for (std::size_t j = 0; j < M; ++j) {
    mesh.points[j] = a + (b - a) * static_cast<double>(j) / static_cast<double>(M);
  }
  mesh.points[M] = b;
  return mesh;
}

MeshSpec graded_mesh(double a, double b, std::size_t M, double q) {
  if (M == 0) throw Error(ErrorCode::invalid_parameter, "mesh requires M >= 1");
  if (!(q >= 1.0) || !std::isfinite(q)) throw Error(ErrorCode::invalid_parameter, "grading needs q >= 1");
  if (!(a < b)) throw Error(ErrorCode::invalid_interval, "mesh requires a < b");
  MeshSpec mesh{MeshSpec::Kind::graded, M, q, std::vector<double>(M + 1)};
  for (std::size_t j = 0; j < M; ++j) {
    mesh.points[j] = a + (b - a) * std::pow(static_cast<double>(j) / static_cast<double>(M), q);
  }
  mesh.points[M] = b;
  return mesh;
}

double default_grading_exponent(std::size_t N, std::size_t n_order) {
  // (N + 1) / (beta + 1) = (N + 1)(n + 1) is an integer.
  return static_cast<double>((N + 1) * (n_order + 1) + 1);
}

double grading_exponent_bound(std::size_t N, std::size_t n_order, double r) {
  const double beta = -static_cast<double>(n_order) / static_cast<double>(n_order + 1);
  const double denom = beta + 1.0 - r;
  if (!(denom > 0.0)) throw Error(ErrorCode::invalid_parameter, "r_select must be below beta + 1");
  return (static_cast<double>(N) + 1.0 - r) / denom;
}

complex mfcc_panel(const OscProblem& problem, double a, double b, std::size_t N,
                   std::span<const double> u, const PanelOptions& options, PanelStats* stats) {
  if (N == 0) throw Error(ErrorCode::invalid_parameter, "MFCC rule requires N >= 1");
  const PanelTransform tr = panel_transform(problem.g, a, b, problem.k);
  const NodeImages img = node_images(problem.g, tr, u);
  const FccRule rule = make_fcc_rule(N, tr.ktilde);
  const std::size_t last = u.size() - 1;

  std::optional<double> scale;
  if (options.check_stationary) scale = (tr.gb - tr.ga) / (b - a);
  const double xc = 0.5 * (a + b);
  const double xl = 0.5 * (b - a);
  std::size_t evals = 0;
  auto sigma_at = [&](std::size_t j) {
    const double x = j == 0 ? a : (j == last ? b : xc + xl * u[j]);
    ++evals;
    return sigma_eval(problem, x, scale);
  };

  std::vector<complex> F(N + 1);
  const auto& t = rule.nodes.nodes;
  if (options.interp.kind == PanelInterp::Kind::full) {
    std::vector<complex> sigma(u.size());
    for (std::size_t j = 0; j <= last; ++j) sigma[j] = sigma_at(j);
    const BarySet set = make_bary_set(img.d, sigma);
    for (std::size_t j = 0; j <= N; ++j) F[j] = bary_eval_full(set, t[j]);
  } else {
    const std::size_t s = options.interp.s;
    if (s < 2 || s > u.size()) {
      throw Error(ErrorCode::invalid_parameter, "tube size must satisfy 2 <= s <= N'+1");
    }
    std::vector<complex> sigma(u.size());
    std::vector<bool> have(u.size(), false);
    for (std::size_t j = 0; j <= N; ++j) {
      const TubeSelection tube = select_tube(img.d, t[j], s);
      for (std::size_t m = tube.j; m < tube.j + s; ++m) {
        if (!have[m]) {
          sigma[m] = sigma_at(m);
          have[m] = true;
        }
      }
      F[j] = bary_eval_window(img.d, sigma, tube, t[j]);
    }
  }

  const complex value = tr.l * std::exp(complex(0.0, problem.k * tr.c)) * fcc_apply(rule, F);
  if (stats) {
    stats->evals = evals;
    stats->lambda = img.lambda;
    stats->small_ktilde = rule.folded;
  }
  return value;
}

QuadResult method1_integrate(const OscProblem& problem, std::size_t M, std::size_t N) {
  check_problem(problem);
  if (N == 0) throw Error(ErrorCode::invalid_parameter, "method I requires N >= 1");
  const OrientedProblem op = normalize_orientation(problem);
  const MeshSpec mesh = uniform_mesh(op.problem.a, op.problem.b, M);
  const std::vector<double> u = cc_nodes_ascending(N);

  QuadResult out;
  complex sum = 0.0;
  for (std::size_t i = 0; i < M; ++i) {
    PanelStats st;
    sum += mfcc_panel(op.problem, mesh.points[i], mesh.points[i + 1], N, u, {}, &st);
    out.evals += st.evals;
    out.lambda_max = std::max(out.lambda_max, st.lambda);
    if (st.small_ktilde) add_tag(out.fallbacks, "small-ktilde");
  }
  out.panels_used = M;
  out.value = apply_postprocess(op.post, sum);
  return out;
}

QuadResult method2_integrate(const OscProblem& problem, std::size_t N, std::size_t Nprime,
                             std::size_t s, NodeKind nodes) {
  check_problem(problem);
  if (N == 0) throw Error(ErrorCode::invalid_parameter, "method II requires N >= 1");
  if (Nprime == 0) throw Error(ErrorCode::invalid_parameter, "method II requires N' >= 1");
  if (s < 2 || s > Nprime + 1) {
    throw Error(ErrorCode::invalid_parameter, "tube size must satisfy 2 <= s <= N'+1");
  }
  const OrientedProblem op = normalize_orientation(problem);
  const std::vector<double> u =
      nodes == NodeKind::uniform ? uniform_reference(Nprime) : cc_nodes_ascending(Nprime);

  QuadResult out;
  if (static_cast<double>(Nprime) < problem.k * static_cast<double>(N)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "N' = %zu is below k*N = %.6g", Nprime,
                  problem.k * static_cast<double>(N));
    out.warnings.emplace_back(buf);
  }
  PanelStats st;
  const PanelOptions opts{PanelInterp::tube(s), true};
  const complex v = mfcc_panel(op.problem, op.problem.a, op.problem.b, N, u, opts, &st);
  out.value = apply_postprocess(op.post, v);
  out.panels_used = 1;
  out.evals = st.evals;
  out.lambda_max = st.lambda;
  if (st.small_ktilde) add_tag(out.fallbacks, "small-ktilde");
  return out;
}

QuadResult graded_integrate(const OscProblem& problem, const GradedParams& params) {
  check_problem(problem);
  if (params.N == 0) throw Error(ErrorCode::invalid_parameter, "graded rule requires N >= 1");
  if (params.M == 0) throw Error(ErrorCode::invalid_parameter, "graded rule requires M >= 1");
  if (params.n_order == 0) throw Error(ErrorCode::invalid_parameter, "stationary order must be >= 1");
  const double q = params.q.value_or(default_grading_exponent(params.N, params.n_order));
  const double bound = grading_exponent_bound(params.N, params.n_order, params.r_select);
  if (!(q > bound)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "grading exponent q = %.6g must exceed %.6g", q, bound);
    throw Error(ErrorCode::invalid_parameter, buf);
  }

  const OrientedProblem op = normalize_orientation(problem);
  const OscProblem& p = op.problem;
  QuadResult out;
  add_tag(out.fallbacks, "first-panel-zero");
  out.panels_used = params.M;

  if (auto est = estimate_order(p.g, p.a, p.b)) {
    const double expected = static_cast<double>(params.n_order + 1);
    if (std::abs(*est - expected) > 0.5) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "order-mismatch: g grows like (x-a)^%.3g at a, declared order %zu implies %g",
                    *est, params.n_order, expected);
      out.warnings.emplace_back(buf);
    }
  }

  const MeshSpec mesh = graded_mesh(p.a, p.b, params.M, q);
  const std::vector<double> u = cc_nodes_ascending(params.N);
  const PanelOptions opts{PanelInterp::full(), false};
  complex sum = 0.0;
  for (std::size_t i = 1; i < params.M; ++i) {
    const double xa = mesh.points[i], xb = mesh.points[i + 1];
    if (!(xa < xb)) continue;
    const double ga = p.g(complex(xa, 0.0)).real();
    const double gb = p.g(complex(xb, 0.0)).real();
    const double resolution = 16.0 * std::numeric_limits<double>::epsilon() *
                              std::max(std::abs(ga), std::abs(gb));
    if (gb - ga < -resolution) {
      throw Error(ErrorCode::oscillator_not_monotone, "g decreases on a graded panel");
    }
    std::optional<complex> v;
    PanelStats st;
    if (gb - ga > resolution && !prefer_direct(p.k * (gb - ga), resolution / (gb - ga), params.N)) {
      try {
        v = mfcc_panel(p, xa, xb, params.N, u, opts, &st);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::stationary_point && e.code() != ErrorCode::evaluation &&
            e.code() != ErrorCode::oscillator_not_monotone) {
          throw;
        }
      }
      out.evals += st.evals;
      if (v && !finite(*v)) v.reset();
    }
    if (!v) {
      add_tag(out.fallbacks, "direct-panel");
      sum += direct_panel(p, xa, xb, params.N);
      out.evals += params.N + 1;
      continue;
    }
    out.lambda_max = std::max(out.lambda_max, st.lambda);
    if (st.small_ktilde) add_tag(out.fallbacks, "small-ktilde");
    sum += *v;
  }
  out.value = apply_postprocess(op.post, sum);
  return out;
}

std::vector<Subproblem> split_at_stationary_points(const OscProblem& problem,
                                                   std::span<const StationaryPoint> points) {
  check_problem(problem);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double x = points[i].location;
    if (!(x >= problem.a && x <= problem.b)) {
      throw Error(ErrorCode::invalid_parameter, "stationary point outside [a, b]");
    }
    if (points[i].order == 0) throw Error(ErrorCode::invalid_parameter, "stationary order must be >= 1");
    if (i > 0 && !(x > points[i - 1].location)) {
      throw Error(ErrorCode::invalid_parameter, "stationary points must be sorted and distinct");
    }
  }

  std::vector<double> cuts{problem.a};
  std::vector<std::optional<std::size_t>> order{std::nullopt};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double x = points[i].location;
    if (i > 0) {
      cuts.push_back(0.5 * (points[i - 1].location + x));
      order.emplace_back();
    }
    if (x == problem.a) {
      order.front() = points[i].order;
    } else if (x == problem.b) {
      continue;
    } else {
      cuts.push_back(x);
      order.emplace_back(points[i].order);
    }
  }
  cuts.push_back(problem.b);
  order.emplace_back();
  if (!points.empty() && points.back().location == problem.b) order.back() = points.back().order;

  std::vector<Subproblem> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    OscProblem piece = problem;
    piece.a = cuts[i];
    piece.b = cuts[i + 1];
    Subproblem sub;
    if (order[i + 1]) {
      piece = reflect(piece);
      sub.reflected = true;
      sub.stationary_order = order[i + 1];
    } else {
      sub.stationary_order = order[i];
    }
    OrientedProblem op = normalize_orientation(piece);
    sub.problem = std::move(op.problem);
    sub.post = op.post;
    pieces.push_back(std::move(sub));
  }
  return pieces;
}

QuadResult integrate_with_stationary_points(const OscProblem& problem,
                                            std::span<const StationaryPoint> points,
                                            std::size_t M, std::size_t N) {
  QuadResult total;
  for (const Subproblem& sub : split_at_stationary_points(problem, points)) {
    QuadResult part;
    if (sub.stationary_order) {
      GradedParams gp;
      gp.n_order = *sub.stationary_order;
      gp.N = N;
      gp.M = M;
      part = graded_integrate(sub.problem, gp);
    } else {
      part = method1_integrate(sub.problem, M, N);
    }
    part.value = apply_postprocess(sub.post, part.value);
    merge(total, part);
  }
  return total;
}

}  // namespace mfcc
