#include "mfcc/chebyshev.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "mfcc/error.hpp"

namespace mfcc {

namespace {

constexpr std::size_t kFastTransformThreshold = 64;

// cos(m*pi/N) for m = 0..2N-1 with the symmetries of the cosine imposed, so
// that entries that should coincide (up to sign) are bitwise equal.
std::vector<double> cosine_table(std::size_t N) {
  std::vector<double> c(2 * N);
  for (std::size_t m = 0; 2 * m <= N; ++m) {
    c[m] = std::cos(std::numbers::pi * static_cast<double>(m) / static_cast<double>(N));
  }
  for (std::size_t m = N / 2 + 1; m <= N; ++m) c[m] = -c[N - m];
  if (N % 2 == 0) c[N / 2] = 0.0;
  for (std::size_t m = N + 1; m < 2 * N; ++m) c[m] = c[2 * N - m];
  return c;
}

void check_values(std::span<const std::complex<double>> values) {
  if (values.size() < 2) {
    throw Error(ErrorCode::invalid_parameter, "cheb_coeffs needs at least 2 values (N >= 1)");
  }
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::invalid_value, "cheb_coeffs received a non-finite value");
    }
  }
}

// FFTW's planner is not re-entrant; execution on a shared plan with the
// new-array interface is.
class DctPlanCache {
 public:
  fftw_plan plan_for(std::size_t n) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    std::vector<double> in(n), out(n);
    fftw_plan p = fftw_plan_r2r_1d(static_cast<int>(n), in.data(), out.data(), FFTW_REDFT00,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(n, p);
    return p;
  }

  ~DctPlanCache() {
    for (auto& [n, p] : plans_) fftw_destroy_plan(p);
  }

 private:
  std::mutex mutex_;
  std::map<std::size_t, fftw_plan> plans_;
};

DctPlanCache& plan_cache() {
  static DctPlanCache cache;
  return cache;
}

}  // namespace

ChebNodes cc_nodes(std::size_t N) {
  if (N == 0) throw Error(ErrorCode::invalid_parameter, "cc_nodes requires N >= 1");
  ChebNodes out{N, std::vector<double>(N + 1)};
  const auto c = cosine_table(N);
  for (std::size_t j = 0; j <= N; ++j) out.nodes[j] = c[j];
  return out;
}

std::vector<double> cc_nodes_ascending(std::size_t N) {
  auto n = cc_nodes(N).nodes;
  return {n.rbegin(), n.rend()};
}

ChebCoeffs cheb_coeffs_direct(std::span<const std::complex<double>> values) {
  check_values(values);
  const std::size_t N = values.size() - 1;
  const auto c = cosine_table(N);
  ChebCoeffs out{N, std::vector<std::complex<double>>(N + 1)};
  const double scale = 2.0 / static_cast<double>(N);
  for (std::size_t n = 0; n <= N; ++n) {
    std::complex<double> sum = 0.5 * (values[0] + c[(N * n) % (2 * N)] * values[N]);
    for (std::size_t j = 1; j < N; ++j) sum += c[(j * n) % (2 * N)] * values[j];
    out.alpha[n] = scale * sum;
  }
  return out;
}

ChebCoeffs cheb_coeffs_fast(std::span<const std::complex<double>> values) {
  check_values(values);
  const std::size_t N = values.size() - 1;
  const std::size_t n = N + 1;
  fftw_plan plan = plan_cache().plan_for(n);

  std::vector<double> re(n), im(n), out_re(n), out_im(n);
  for (std::size_t j = 0; j < n; ++j) {
    re[j] = values[j].real();
    im[j] = values[j].imag();
  }
  // REDFT00 computes X_0 + (-1)^k X_N + 2 sum_{j=1}^{N-1} X_j cos(pi j k / N).
  fftw_execute_r2r(plan, re.data(), out_re.data());
  fftw_execute_r2r(plan, im.data(), out_im.data());

  ChebCoeffs out{N, std::vector<std::complex<double>>(n)};
  const double scale = 1.0 / static_cast<double>(N);
  for (std::size_t k = 0; k < n; ++k) out.alpha[k] = {scale * out_re[k], scale * out_im[k]};
  return out;
}

ChebCoeffs cheb_coeffs(std::span<const std::complex<double>> values) {
  if (values.size() >= kFastTransformThreshold + 1) return cheb_coeffs_fast(values);
  return cheb_coeffs_direct(values);
}

ChebCoeffs cheb_coeffs(std::span<const double> values) {
  std::vector<std::complex<double>> v(values.begin(), values.end());
  return cheb_coeffs(std::span<const std::complex<double>>(v));
}

std::complex<double> cheb_interp_eval(const ChebCoeffs& coeffs, double x) {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw Error(ErrorCode::domain, "cheb_interp_eval: x outside [-1, 1]");
  }
  const std::size_t N = coeffs.order;
  if (coeffs.alpha.size() != N + 1 || N == 0) {
    throw Error(ErrorCode::invalid_parameter, "cheb_interp_eval: malformed coefficients");
  }
  auto coef = [&](std::size_t k) {
    return (k == 0 || k == N) ? 0.5 * coeffs.alpha[k] : coeffs.alpha[k];
  };
  std::complex<double> b1 = 0.0, b2 = 0.0;
  for (std::size_t k = N; k >= 1; --k) {
    const std::complex<double> b0 = coef(k) + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coef(0) + x * b1 - b2;
}

double chebyshev_t(std::size_t n, double x) {
  if (std::abs(x) <= 1.0 && n > 32) return std::cos(static_cast<double>(n) * std::acos(x));
  double t0 = 1.0, t1 = x;
  if (n == 0) return t0;
  for (std::size_t k = 1; k < n; ++k) {
    const double t2 = 2.0 * x * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

}  // namespace mfcc
