#pragma once

#include <iosfwd>

namespace mfcc::cli {

/// Exit codes: 0 success, 2 usage error, 3 numerical failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mfcc::cli
