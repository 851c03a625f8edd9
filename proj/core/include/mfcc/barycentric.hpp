#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mfcc/function.hpp"

namespace mfcc {

/// Lagrange interpolation data for the first barycentric form
///   p(x) = l(x) * sum_n w_n / (x - d_n) * v_n,  l(x) = prod_n (x - d_n).
///
/// Weights are stored multiplied by (L/4)^(n-1), L the node span, and l(x)
/// is evaluated with the matching factor, which keeps both finite for
/// large node counts without changing p(x).
struct BarySet {
  std::vector<double> nodes;
  std::vector<complex> values;
  std::vector<double> w;
  double capacity = 1.0;  // L / 4
};

/// w_n = 1 / prod_{m != n} (d_n - d_m), scaled by capacity^(n-1) with
/// capacity = (d_last - d_first) / 4. Throws invalid_nodes for fewer than
/// two nodes or nodes that are not strictly increasing.
std::vector<double> bary_weights(std::span<const double> nodes, double capacity = 1.0);

/// Capacity used by make_bary_set for a node span.
double bary_capacity(std::span<const double> nodes);

BarySet make_bary_set(std::span<const double> nodes, std::span<const complex> values);

/// Returns values[n] when x is within a few ulps of node n. Throws domain
/// when x lies outside [nodes.front(), nodes.back()].
complex bary_eval_full(const BarySet& set, double x);

/// A window of s consecutive nodes d_j .. d_{j+s-1}.
struct TubeSelection {
  std::size_t s = 0;
  std::size_t j = 0;
};

/// Among the windows of s consecutive nodes containing x, the one whose
/// midpoint is closest to x; ties go to the smaller j. Throws
/// invalid_parameter unless 2 <= s <= nodes.size(), domain if x is outside
/// the node range.
TubeSelection select_tube(std::span<const double> nodes, double x, std::size_t s);

/// First-form evaluation on the window chosen by select_tube.
complex bary_eval_local(std::span<const double> nodes, std::span<const complex> values, double x,
                        std::size_t s);

/// Same, with the window given.
complex bary_eval_window(std::span<const double> nodes, std::span<const complex> values,
                         const TubeSelection& tube, double x);

}  // namespace mfcc
