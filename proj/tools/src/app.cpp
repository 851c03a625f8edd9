#include "mfcc_cli/app.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include <mfcc/error.hpp>
#include <mfcc/fcc_rule.hpp>
#include <mfcc/methods.hpp>

#include "mfcc_cli/expr.hpp"
#include "mfcc_cli/study.hpp"

namespace mfcc::cli {

namespace {

constexpr int kUsage = 2;
constexpr int kNumerical = 3;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_usage(ErrorCode code) {
  return code == ErrorCode::invalid_parameter || code == ErrorCode::invalid_interval;
}

struct IntegrateArgs {
  std::string method, f, g;
  std::optional<std::string> gprime;
  double a = 0.0, b = 1.0, k = 1.0;
  std::size_t N = 8, M = 16, s = 3;
  std::optional<std::size_t> Nprime, stat_order;
  std::optional<double> q;
  bool verbose = false;
};

void report(std::ostream& err, const QuadResult& r) {
  err << "panels " << r.panels_used << "\nevals " << r.evals << "\nlambda_max " << fmt(r.lambda_max)
      << '\n';
  for (const auto& t : r.fallbacks) err << "fallback " << t << '\n';
  for (const auto& w : r.warnings) err << "warning " << w << '\n';
}

int do_integrate(const IntegrateArgs& args, std::ostream& out, std::ostream& err) {
  const OscProblem p = make_problem(args.f, args.g, args.gprime, args.a, args.b, args.k);
  complex value;
  if (args.method == "fcc") {
    if (!(args.a < args.b)) throw UsageError("requires a < b");
    value = fcc_linear(p, args.N);
  } else {
    QuadResult r;
    if (args.method == "mfcc1") {
      r = method1_integrate(p, args.M, args.N);
    } else if (args.method == "mfcc2") {
      const std::size_t Np = args.Nprime.value_or(
          static_cast<std::size_t>(std::ceil(args.k * static_cast<double>(args.N))));
      r = method2_integrate(p, args.N, Np, args.s);
    } else {
      if (!args.stat_order) throw UsageError("--method graded requires --stat-order");
      GradedParams gp;
      gp.n_order = *args.stat_order;
      gp.N = args.N;
      gp.M = args.M;
      gp.q = args.q;
      r = graded_integrate(p, gp);
    }
    if (args.verbose) report(err, r);
    value = r.value;
  }
  out << fmt(value.real()) << '\t' << fmt(value.imag()) << '\n';
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oscillatory integrals int f(x) exp(i k g(x)) dx by modified Filon-Clenshaw-Curtis rules"};
  app.require_subcommand(1);

  IntegrateArgs ia;
  auto* integrate = app.add_subcommand("integrate", "Evaluate one integral");
  integrate->add_option("--method", ia.method, "fcc | mfcc1 | mfcc2 | graded")
      ->required()
      ->check(CLI::IsMember({"fcc", "mfcc1", "mfcc2", "graded"}));
  integrate->add_option("--f", ia.f, "amplitude expression in x")->required();
  integrate->add_option("--g", ia.g, "oscillator expression in x")->required();
  integrate->add_option("--a", ia.a, "left endpoint")->required();
  integrate->add_option("--b", ia.b, "right endpoint")->required();
  integrate->add_option("--k", ia.k, "frequency")->required();
  integrate->add_option("--N", ia.N, "rule order")->capture_default_str();
  integrate->add_option("--M", ia.M, "panel count (mfcc1, graded)")->capture_default_str();
  integrate->add_option("--Nprime", ia.Nprime, "reference nodes for mfcc2 (default ceil(k N))");
  integrate->add_option("--s", ia.s, "tube size for mfcc2")->capture_default_str();
  integrate->add_option("--q", ia.q, "grading exponent (graded)");
  integrate->add_option("--stat-order", ia.stat_order, "stationary-point order at a (graded)");
  integrate->add_option("--gprime", ia.gprime, "exact derivative of g, replaces the complex step");
  integrate->add_flag("--verbose", ia.verbose, "diagnostics on standard error");

  std::string config;
  std::optional<int> table;
  std::string study_out;
  auto* study = app.add_subcommand("study", "Convergence study written as CSV");
  auto* cfg_opt = study->add_option("--config", config, "key=value study file");
  auto* tbl_opt = study->add_option("--table", table, "preset grid 1, 2 or 3");
  cfg_opt->excludes(tbl_opt);
  study->add_option("--out", study_out, "CSV file (default standard output)");

  std::size_t wN = 8;
  double wk = 1.0;
  auto* weights = app.add_subcommand("weights", "Modified moments omega_n as CSV");
  weights->add_option("--N", wN, "order")->required();
  weights->add_option("--k", wk, "ktilde")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (integrate->parsed()) return do_integrate(ia, out, err);

    if (study->parsed()) {
      StudySpec spec;
      if (table) {
        spec = table_preset(*table);
      } else if (!config.empty()) {
        std::ifstream in(config);
        if (!in) throw UsageError("cannot open config file '" + config + "'");
        spec = parse_study_config(in);
      } else {
        throw UsageError("study needs --config FILE or --table N");
      }
      if (!study_out.empty()) spec.output = study_out;
      validate(spec);
      if (spec.output.empty()) {
        run_study(spec, out);
      } else {
        std::ofstream file(spec.output);
        if (!file) throw UsageError("cannot write '" + spec.output + "'");
        run_study(spec, file);
      }
      return 0;
    }

    if (weights->parsed()) {
      const FccRule rule = make_fcc_rule(wN, wk);
      out << "n,re,im\n";
      for (std::size_t n = 0; n <= wN; ++n) {
        out << n << ',' << fmt(rule.weights.omega[n].real()) << ',' << fmt(rule.weights.omega[n].imag())
            << '\n';
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "expression error at " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_usage(e.code()) ? kUsage : kNumerical;
  }
  return kUsage;
}

}  // namespace mfcc::cli
