#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mfcc {

/// Clenshaw-Curtis points t_j = cos(j*pi/N), j = 0..N, in descending order.
struct ChebNodes {
  std::size_t order = 0;
  std::vector<double> nodes;
};

/// Coefficients of the interpolant sum''_{n=0}^{N} alpha_n T_n, where the
/// double prime halves the first and last terms.
struct ChebCoeffs {
  std::size_t order = 0;
  std::vector<std::complex<double>> alpha;
};

/// Throws invalid_parameter for N == 0. The result is exactly symmetric:
/// t_j == -t_{N-j} bitwise, and the middle node is 0 for even N.
ChebNodes cc_nodes(std::size_t N);

/// Same nodes in ascending order (-1 .. 1), as used for reference nodes u_j.
std::vector<double> cc_nodes_ascending(std::size_t N);

/// Discrete cosine transform of values sampled at cc_nodes(N). Uses the
/// direct sum below N = 64 and an FFT-based DCT-I from N = 64 on.
ChebCoeffs cheb_coeffs(std::span<const std::complex<double>> values);
ChebCoeffs cheb_coeffs(std::span<const double> values);

/// Reference O(N^2) transform, always available for cross-checking.
ChebCoeffs cheb_coeffs_direct(std::span<const std::complex<double>> values);

/// FFT path regardless of N.
ChebCoeffs cheb_coeffs_fast(std::span<const std::complex<double>> values);

/// Clenshaw recurrence for sum''. Throws domain for x outside [-1, 1].
std::complex<double> cheb_interp_eval(const ChebCoeffs& coeffs, double x);

/// T_n(x) for |x| <= 1.
double chebyshev_t(std::size_t n, double x);

}  // namespace mfcc
