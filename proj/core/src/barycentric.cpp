#include "mfcc/barycentric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "mfcc/error.hpp"

namespace mfcc {

namespace {

void check_nodes(std::span<const double> nodes) {
  if (nodes.size() < 2) throw Error(ErrorCode::invalid_nodes, "need at least two nodes");
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!(nodes[i] > nodes[i - 1])) {
      throw Error(ErrorCode::invalid_nodes, "nodes must be strictly increasing (no duplicates)");
    }
  }
}

std::optional<std::size_t> node_hit(std::span<const double> nodes, double x) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
  for (auto cand : {it, it == nodes.begin() ? it : std::prev(it)}) {
    if (cand == nodes.end()) continue;
    const double d = *cand;
    if (std::abs(x - d) <= 2.0 * eps * std::max(std::abs(x), std::abs(d))) {
      return static_cast<std::size_t>(cand - nodes.begin());
    }
    if (x == d) return static_cast<std::size_t>(cand - nodes.begin());
  }
  return std::nullopt;
}

complex first_form(std::span<const double> nodes, std::span<const complex> values,
                   std::span<const double> w, double capacity, double x) {
  if (auto hit = node_hit(nodes, x)) return values[*hit];
  double ell = capacity;
  complex sum = 0.0;
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    const double diff = x - nodes[n];
    ell *= diff / capacity;
    sum += (w[n] / diff) * values[n];
  }
  return ell * sum;
}

}  // namespace

std::vector<double> bary_weights(std::span<const double> nodes, double capacity) {
  check_nodes(nodes);
  if (!(capacity > 0.0)) throw Error(ErrorCode::invalid_parameter, "capacity must be positive");
  const std::size_t n = nodes.size();
  std::vector<double> w(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    double prod = 1.0;
    for (std::size_t m = 0; m < n; ++m) {
      if (m != i) prod *= (nodes[i] - nodes[m]) / capacity;
    }
    w[i] = 1.0 / prod;
  }
  return w;
}

double bary_capacity(std::span<const double> nodes) {
  check_nodes(nodes);
  return (nodes.back() - nodes.front()) / 4.0;
}

BarySet make_bary_set(std::span<const double> nodes, std::span<const complex> values) {
  if (values.size() != nodes.size()) {
    throw Error(ErrorCode::invalid_parameter, "nodes and values differ in length");
  }
  BarySet set;
  set.capacity = bary_capacity(nodes);
  set.nodes.assign(nodes.begin(), nodes.end());
  set.values.assign(values.begin(), values.end());
  set.w = bary_weights(nodes, set.capacity);
  return set;
}

complex bary_eval_full(const BarySet& set, double x) {
  if (!(x >= set.nodes.front() && x <= set.nodes.back())) {
    throw Error(ErrorCode::domain, "barycentric extrapolation is not supported");
  }
  return first_form(set.nodes, set.values, set.w, set.capacity, x);
}

TubeSelection select_tube(std::span<const double> nodes, double x, std::size_t s) {
  const std::size_t count = nodes.size();
  if (s < 2 || s > count) {
    throw Error(ErrorCode::invalid_parameter, "tube size must satisfy 2 <= s <= N'+1");
  }
  if (!(x >= nodes.front() && x <= nodes.back())) {
    throw Error(ErrorCode::domain, "tube evaluation point outside the node range");
  }
  const std::size_t max_j = count - s;
  // Windows [j, j+s-1] containing x satisfy lo <= j <= hi.
  const auto first_ge = static_cast<std::size_t>(
      std::lower_bound(nodes.begin(), nodes.end(), x) - nodes.begin());
  const auto last_le = static_cast<std::size_t>(
      std::upper_bound(nodes.begin(), nodes.end(), x) - nodes.begin() - 1);
  const std::size_t hi = std::min(last_le, max_j);
  const std::size_t lo = first_ge + 1 >= s ? first_ge + 1 - s : 0;

  std::size_t best = lo;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t j = lo; j <= hi; ++j) {
    const double dist = std::abs(0.5 * (nodes[j] + nodes[j + s - 1]) - x);
    if (dist < best_dist) {
      best_dist = dist;
      best = j;
    }
  }
  return {s, best};
}

complex bary_eval_window(std::span<const double> nodes, std::span<const complex> values,
                         const TubeSelection& tube, double x) {
  const auto win = nodes.subspan(tube.j, tube.s);
  const auto vals = values.subspan(tube.j, tube.s);
  const double capacity = bary_capacity(win);
  const auto w = bary_weights(win, capacity);
  return first_form(win, vals, w, capacity, x);
}

complex bary_eval_local(std::span<const double> nodes, std::span<const complex> values, double x,
                        std::size_t s) {
  if (values.size() != nodes.size()) {
    throw Error(ErrorCode::invalid_parameter, "nodes and values differ in length");
  }
  return bary_eval_window(nodes, values, select_tube(nodes, x, s), x);
}

}  // namespace mfcc
