#include "mfcc/moments.hpp"

#include <cmath>

#include "mfcc/error.hpp"
#include "mfcc/gauss_legendre.hpp"

namespace mfcc {

namespace {

using cplx = std::complex<double>;

// Setting rho_{L+1} = 0 perturbs rho_n, n <= N, by about |rho_{L+1}| times
// the product of 1/|r_big(m)| over m = N..L, r_big the growing root of the
// homogeneous recurrence. L is the first index where that product is below
// this bound.
constexpr double kSeparation = 1e-18;

std::size_t truncation_index(std::size_t N, double ktilde) {
  const std::size_t margin =
      static_cast<std::size_t>(std::ceil(10.0 + 0.5 * std::sqrt(static_cast<double>(N))));
  double product = 1.0;
  std::size_t n = N;
  while (true) {
    const double t = static_cast<double>(n) / ktilde;
    if (t > 1.0) {
      const double s = std::sqrt(t * t - 1.0);
      product *= t - s;
    }
    if (n >= N + margin && product < kSeparation) return n;
    ++n;
  }
}

FccWeights small_ktilde_weights(std::size_t N, double ktilde) {
  const GaussRule& rule = gauss_legendre(N / 2 + 24);
  FccWeights out{ktilde, N, std::vector<cplx>(N + 1, cplx{}), {}};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const double theta = std::acos(x);
    const cplx e = rule.weights[i] * std::exp(cplx(0.0, ktilde * x));
    for (std::size_t n = 0; n <= N; ++n) {
      out.omega[n] += std::cos(static_cast<double>(n) * theta) * e;
    }
  }
  return out;
}

}  // namespace

cplx gamma_n(std::size_t n, double ktilde) {
  if (!(ktilde > 0.0)) throw Error(ErrorCode::invalid_parameter, "gamma_n requires ktilde > 0");
  if (n % 2 == 0) return {2.0 * std::sin(ktilde) / ktilde, 0.0};
  // 2 cos(k) / (i k) = -2i cos(k) / k
  return {0.0, -2.0 * std::cos(ktilde) / ktilde};
}

FccWeights fcc_weights(std::size_t N, double ktilde) {
  if (N == 0) throw Error(ErrorCode::invalid_parameter, "fcc_weights requires N >= 1");
  if (!(ktilde >= k_min)) {
    throw Error(ErrorCode::fallback_required, "ktilde below k_min; use plain Clenshaw-Curtis");
  }
  if (ktilde < k_small_regime) return small_ktilde_weights(N, ktilde);

  const cplx inv_ik(0.0, -1.0 / ktilde);  // 1/(i k)
  const double kc = std::ceil(ktilde);
  const std::size_t nstar = kc >= static_cast<double>(N) ? N : static_cast<std::size_t>(kc);

  std::vector<cplx> gamma(N + 1);
  const cplx g_even = gamma_n(0, ktilde), g_odd = gamma_n(1, ktilde);
  for (std::size_t n = 0; n <= N; ++n) gamma[n] = (n % 2 == 0) ? g_even : g_odd;

  FccWeights out{ktilde, N, std::vector<cplx>(N + 1), std::vector<cplx>(N + 1, cplx{})};
  auto& rho = out.rho;
  auto& omega = out.omega;

  // Phase 1: forward recursion, stable while n <= ktilde.
  rho[1] = gamma[0];
  if (nstar >= 2) rho[2] = 2.0 * gamma[1] - 2.0 * inv_ik * gamma[0];
  for (std::size_t n = 2; n + 1 <= nstar; ++n) {
    rho[n + 1] = 2.0 * gamma[n] - 2.0 * static_cast<double>(n) * inv_ik * rho[n] + rho[n - 1];
  }
  omega[0] = rho[1];
  for (std::size_t n = 1; n <= nstar; ++n) {
    omega[n] = gamma[n] - static_cast<double>(n) * inv_ik * rho[n];
  }
  if (N == nstar) return out;

  // Phase 2: rho_{n+1} + (2n/(ik)) rho_n - rho_{n-1} = 2 gamma_n for
  // n = nstar+1..L with rho_nstar known and rho_{L+1} = 0. Diagonally
  // dominant because |2n/k| >= 2 here, so Thomas elimination is stable.
  const std::size_t L = truncation_index(N, ktilde);
  const std::size_t m = L - nstar;
  std::vector<cplx> cprime(m), dprime(m), sol(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t n = nstar + 1 + i;
    const cplx diag = 2.0 * static_cast<double>(n) * inv_ik;
    const cplx rhs = 2.0 * ((n % 2 == 0) ? g_even : g_odd) + (i == 0 ? rho[nstar] : cplx{});
    if (i == 0) {
      cprime[0] = 1.0 / diag;
      dprime[0] = rhs / diag;
    } else {
      const cplx denom = diag + cprime[i - 1];
      cprime[i] = 1.0 / denom;
      dprime[i] = (rhs + dprime[i - 1]) / denom;
    }
  }
  sol[m - 1] = dprime[m - 1];
  for (std::size_t i = m - 1; i-- > 0;) sol[i] = dprime[i] - cprime[i] * sol[i + 1];

  for (std::size_t n = nstar + 1; n <= N; ++n) {
    rho[n] = sol[n - nstar - 1];
    omega[n] = gamma[n] - static_cast<double>(n) * inv_ik * rho[n];
  }
  return out;
}

std::vector<double> cc_plain_weights(std::size_t N) {
  if (N == 0) throw Error(ErrorCode::invalid_parameter, "cc_plain_weights requires N >= 1");
  std::vector<double> w(N + 1, 0.0);
  for (std::size_t n = 0; n <= N; n += 2) {
    const double dn = static_cast<double>(n);
    w[n] = 2.0 / (1.0 - dn * dn);
  }
  return w;
}

}  // namespace mfcc
