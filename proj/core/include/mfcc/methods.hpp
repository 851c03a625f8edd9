#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mfcc/function.hpp"
#include "mfcc/oscillator.hpp"

namespace mfcc {

/// Panel endpoints x_0 < ... < x_M.
struct MeshSpec {
  enum class Kind { uniform, graded };
  Kind kind = Kind::uniform;
  std::size_t M = 1;
  double q = 1.0;
  std::vector<double> points;
};

/// x_j = a + (b - a) j / M, with x_M = b exactly.
MeshSpec uniform_mesh(double a, double b, std::size_t M);

/// x_j = a + (b - a) (j / M)^q, with x_M = b exactly. Throws
/// invalid_parameter for M == 0 or q < 1.
MeshSpec graded_mesh(double a, double b, std::size_t M, double q);

/// Parameters of the graded composite rule for a stationary point of order
/// n_order at the left endpoint.
struct GradedParams {
  std::size_t n_order = 1;
  std::size_t N = 4;
  std::size_t M = 100;
  std::optional<double> q;  // default_grading_exponent when empty
  double r_select = 0.0;

  double beta() const { return -static_cast<double>(n_order) / static_cast<double>(n_order + 1); }
};

/// floor((N + 1) / (beta + 1)) + 1.
double default_grading_exponent(std::size_t N, std::size_t n_order);

/// Smallest admissible exponent: q must exceed (N + 1 - r) / (beta + 1 - r).
double grading_exponent_bound(std::size_t N, std::size_t n_order, double r);

struct QuadResult {
  complex value = 0.0;
  std::size_t panels_used = 0;
  std::size_t evals = 0;
  double lambda_max = 0.0;
  std::vector<std::string> fallbacks;  // "small-ktilde", "first-panel-zero", "direct-panel"
  std::vector<std::string> warnings;

  bool has_fallback(std::string_view tag) const;
};

/// How F~ is carried from the node images to the Clenshaw-Curtis points.
struct PanelInterp {
  enum class Kind { full, tube };
  Kind kind = Kind::full;
  std::size_t s = 0;

  static PanelInterp full() { return {}; }
  static PanelInterp tube(std::size_t s) { return {Kind::tube, s}; }
};

struct PanelOptions {
  PanelInterp interp;
  /// Report |g'| below eps_stat * (1 + mean slope) as a stationary point.
  /// With the check off only g' == 0 is rejected.
  bool check_stationary = true;
};

/// Per-panel bookkeeping filled by mfcc_panel.
struct PanelStats {
  std::size_t evals = 0;
  double lambda = 0.0;
  bool small_ktilde = false;
};

/// N-point MFCC rule on the panel [a, b] of `problem` (problem.a and
/// problem.b are ignored). u are the reference nodes (ascending, -1 .. 1);
/// F~(d_j) = f/g' at the preimage of u_j is interpolated to the
/// Clenshaw-Curtis points and integrated by the FCC rule at ktilde = l k.
/// g must be increasing on the panel.
complex mfcc_panel(const OscProblem& problem, double a, double b, std::size_t N,
                   std::span<const double> u, const PanelOptions& options = {},
                   PanelStats* stats = nullptr);

/// Composite rule on M uniform panels with N' = N, u = Clenshaw-Curtis
/// points and full interpolation.
QuadResult method1_integrate(const OscProblem& problem, std::size_t M, std::size_t N);

enum class NodeKind { uniform, cheb };

/// Single panel, N' + 1 reference nodes, s-tube interpolation. Warns when
/// N' < k N. Throws invalid_parameter unless 2 <= s <= N' + 1.
QuadResult method2_integrate(const OscProblem& problem, std::size_t N, std::size_t Nprime,
                             std::size_t s, NodeKind nodes = NodeKind::uniform);

/// Composite MFCC rule on the graded mesh for a stationary point at a. The
/// first panel contributes 0. Throws invalid_parameter if q violates the
/// grading bound.
QuadResult graded_integrate(const OscProblem& problem, const GradedParams& params);

struct StationaryPoint {
  double location = 0.0;
  std::size_t order = 1;
};

/// One piece of a split problem. When `stationary_order` is set the
/// stationary point sits at problem.a.
struct Subproblem {
  OscProblem problem;
  Postprocess post = Postprocess::identity;
  bool reflected = false;
  std::optional<std::size_t> stationary_order;
};

/// Cuts [a, b] at interior stationary points and halfway between
/// neighbouring ones, reflects pieces whose stationary point is on the
/// right and makes every g increasing. The integral is the sum of the
/// pieces after their postprocess. Throws invalid_parameter for unsorted,
/// duplicate or out-of-range points or order 0.
std::vector<Subproblem> split_at_stationary_points(const OscProblem& problem,
                                                   std::span<const StationaryPoint> points);

/// Splits, then applies graded_integrate (default q) to pieces with a
/// stationary point and method1_integrate to the rest, with the same M, N.
QuadResult integrate_with_stationary_points(const OscProblem& problem,
                                            std::span<const StationaryPoint> points,
                                            std::size_t M, std::size_t N);

}  // namespace mfcc
