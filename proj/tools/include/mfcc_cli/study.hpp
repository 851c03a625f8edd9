#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <mfcc/oscillator.hpp>

namespace mfcc::cli {

/// Bad flags, config keys or parameter combinations (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OscProblem make_problem(const std::string& f, const std::string& g,
                        const std::optional<std::string>& gprime, double a, double b, double k);

/// int_a^b f exp(i k g) for an affine g by one FCC rule. Throws UsageError
/// if g is not affine on [a, b].
complex fcc_linear(const OscProblem& problem, std::size_t N);

struct StudySpec {
  std::string method;  // fcc, mfcc1, mfcc2, graded
  std::string f, g;
  std::optional<std::string> gprime;
  double a = 0.0, b = 1.0;
  std::vector<double> k;
  std::vector<std::size_t> M, N, s;
  std::vector<std::size_t> Nprime;  // empty: ceil(k N)
  std::optional<double> q;          // empty: default exponent
  std::optional<std::size_t> n_order;
  std::string output;               // empty: standard output
  double oracle_tol = 1e-13;
  std::size_t oracle_min_panels = 1;
};

inline constexpr const char* csv_header =
    "method,k,M,N,Nprime,s,q,value_re,value_im,abs_error,rate,scaled_error";

/// key = value lines, comma-separated lists, '#' comments. Keys: method f g
/// gprime a b k M N Nprime s q n_order output oracle_tol oracle_min_panels.
StudySpec parse_study_config(std::istream& in);

/// Throws UsageError on missing or inconsistent fields.
void validate(const StudySpec& spec);

/// Preset grids 1, 2 and 3 (see README).
StudySpec table_preset(int table);

/// Writes the header and one row per grid point, flushing each row.
void run_study(const StudySpec& spec, std::ostream& out);

}  // namespace mfcc::cli
