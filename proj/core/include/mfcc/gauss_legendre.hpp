#pragma once

#include <cstddef>
#include <vector>

namespace mfcc {

struct GaussRule {
  std::vector<double> nodes;    // ascending, in (-1, 1)
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
/// Rules are cached; the returned reference stays valid for the program's
/// lifetime.
const GaussRule& gauss_legendre(std::size_t n);

}  // namespace mfcc
