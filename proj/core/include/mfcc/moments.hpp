#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace mfcc {

/// Below this wavenumber the moment recursion divides by ~0; callers fold
/// the exponential into the amplitude and use cc_plain_weights instead.
inline constexpr double k_min = 1e-8;

/// Below this wavenumber (and >= k_min) the moments are evaluated by a
/// Gauss-Legendre rule, because the recursion loses ~eps/ktilde to
/// cancellation.
inline constexpr double k_small_regime = 0.25;

/// Modified moments omega_n(ktilde) = int_{-1}^{1} T_n(x) exp(i ktilde x) dx.
struct FccWeights {
  double ktilde = 0.0;
  std::size_t order = 0;
  std::vector<std::complex<double>> omega;  // n = 0..N
  /// rho_n = int U_{n-1}(x) exp(i ktilde x) dx, index n = 0..N (rho_0 = 0).
  /// Empty when the moments came from the small-ktilde quadrature.
  std::vector<std::complex<double>> rho;
};

/// Boundary term of the integration by parts: 2 sin(k)/k for even n,
/// 2 cos(k)/(i k) for odd n. Throws invalid_parameter for ktilde <= 0.
std::complex<double> gamma_n(std::size_t n, double ktilde);

/// Forward recursion while n <= ceil(ktilde), then a boundary-value solve of
/// the same three-term recurrence (decaying solution) for the remaining n.
/// Throws invalid_parameter for N == 0, fallback_required if ktilde < k_min.
FccWeights fcc_weights(std::size_t N, double ktilde);

/// int_{-1}^{1} T_n(x) dx for n = 0..N: 2/(1-n^2) for even n, 0 for odd n.
std::vector<double> cc_plain_weights(std::size_t N);

}  // namespace mfcc
