#pragma once

#include "mfcc/barycentric.hpp"
#include "mfcc/chebyshev.hpp"
#include "mfcc/error.hpp"
#include "mfcc/fcc_rule.hpp"
#include "mfcc/function.hpp"
#include "mfcc/gauss_legendre.hpp"
#include "mfcc/methods.hpp"
#include "mfcc/moments.hpp"
#include "mfcc/oracle.hpp"
#include "mfcc/oscillator.hpp"
