#pragma once

#include <complex>
#include <functional>

namespace mfcc {

using complex = std::complex<double>;

/// A scalar function that can be evaluated off the real axis. Oscillators
/// must be complex-evaluable because their derivative is taken by complex
/// step; amplitudes only ever see real arguments but share the signature.
/// Implementations must be safe to call concurrently.
using ComplexFn = std::function<complex(complex)>;

/// Optional user-supplied derivative of the oscillator.
using RealFn = std::function<double(double)>;

}  // namespace mfcc
