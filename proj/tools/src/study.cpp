#include "mfcc_cli/study.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <mfcc/fcc_rule.hpp>
#include <mfcc/methods.hpp>
#include <mfcc/oracle.hpp>

#include "mfcc_cli/expr.hpp"

namespace mfcc::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_real(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used == v.size()) return d;
  } catch (const std::exception&) {
  }
  throw UsageError("config: '" + key + "' expects a number, got '" + v + "'");
}

std::size_t to_count(const std::string& key, const std::string& v) {
  const double d = to_real(key, v);
  if (!(d >= 0.0) || std::trunc(d) != d) {
    throw UsageError("config: '" + key + "' expects a non-negative integer, got '" + v + "'");
  }
  return static_cast<std::size_t>(d);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Row {
  double k = 0.0;
  std::optional<std::size_t> M, Nprime, s;
  std::size_t N = 0;
  std::optional<double> q;
  complex value;
};

}  // namespace

OscProblem make_problem(const std::string& f, const std::string& g,
                        const std::optional<std::string>& gprime, double a, double b, double k) {
  OscProblem p;
  p.f = to_function(parse_expr(f));
  p.g = to_function(parse_expr(g));
  if (gprime) {
    Expr gp = parse_expr(*gprime);
    p.gprime = [gp](double x) { return eval_expr(*gp, complex(x, 0.0)).real(); };
  }
  p.a = a;
  p.b = b;
  p.k = k;
  return p;
}

complex fcc_linear(const OscProblem& problem, std::size_t N) {
  const double a = problem.a, b = problem.b;
  const double ga = problem.g(complex(a, 0.0)).real();
  const double gb = problem.g(complex(b, 0.0)).real();
  const double slope = (gb - ga) / (b - a);
  for (int i = 1; i < 8; ++i) {
    const double x = a + (b - a) * i / 8.0;
    const double lin = ga + slope * (x - a);
    const double gx = problem.g(complex(x, 0.0)).real();
    if (std::abs(gx - lin) > 1e-12 * (1.0 + std::abs(ga) + std::abs(gb))) {
      throw UsageError("--method fcc requires an affine g; use mfcc1 or mfcc2");
    }
  }
  const double intercept = ga - slope * a;
  const double kk = problem.k * slope;
  const complex phase = std::exp(complex(0.0, problem.k * intercept));
  if (kk >= 0.0) return phase * fcc_integrate_affine(problem.f, a, b, kk, N);
  const ComplexFn fc = [f = problem.f](complex z) { return std::conj(f(std::conj(z))); };
  return phase * std::conj(fcc_integrate_affine(fc, a, b, -kk, N));
}

StudySpec parse_study_config(std::istream& in) {
  StudySpec spec;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto counts = [&] {
      std::vector<std::size_t> v;
      for (const auto& item : split_list(value)) v.push_back(to_count(key, item));
      return v;
    };
    if (key == "method") spec.method = value;
    else if (key == "f") spec.f = value;
    else if (key == "g") spec.g = value;
    else if (key == "gprime") spec.gprime = value;
    else if (key == "a") spec.a = to_real(key, value);
    else if (key == "b") spec.b = to_real(key, value);
    else if (key == "k") {
      for (const auto& item : split_list(value)) spec.k.push_back(to_real(key, item));
    } else if (key == "M") spec.M = counts();
    else if (key == "N") spec.N = counts();
    else if (key == "s") spec.s = counts();
    else if (key == "Nprime") {
      if (value == "auto") spec.Nprime.clear();
      else spec.Nprime = counts();
    } else if (key == "q") {
      if (value == "auto") spec.q.reset();
      else spec.q = to_real(key, value);
    } else if (key == "n_order" || key == "stat_order") spec.n_order = to_count(key, value);
    else if (key == "output") spec.output = value;
    else if (key == "oracle_tol") spec.oracle_tol = to_real(key, value);
    else if (key == "oracle_min_panels") spec.oracle_min_panels = to_count(key, value);
    else throw UsageError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return spec;
}

void validate(const StudySpec& spec) {
  if (spec.method != "fcc" && spec.method != "mfcc1" && spec.method != "mfcc2" &&
      spec.method != "graded") {
    throw UsageError("study: method must be fcc, mfcc1, mfcc2 or graded");
  }
  if (spec.f.empty() || spec.g.empty()) throw UsageError("study: f and g are required");
  if (!(spec.a < spec.b)) throw UsageError("study: requires a < b");
  if (spec.k.empty() || spec.N.empty()) throw UsageError("study: k and N grids must be non-empty");
  for (double k : spec.k) {
    if (!(k > 0.0)) throw UsageError("study: k must be positive");
  }
  if ((spec.method == "mfcc1" || spec.method == "graded") && spec.M.empty()) {
    throw UsageError("study: " + spec.method + " needs an M grid");
  }
  if (spec.method == "mfcc2" && spec.s.empty()) throw UsageError("study: mfcc2 needs an s grid");
  if (spec.method == "graded" && !spec.n_order) throw UsageError("study: graded requires n_order");
  if (spec.oracle_tol < 1e-15) throw UsageError("study: oracle_tol must be >= 1e-15");
}

StudySpec table_preset(int table) {
  StudySpec spec;
  spec.oracle_tol = 1e-15;
  switch (table) {
    case 1:
      spec.method = "mfcc1";
      spec.f = "x^4.5/(1+x^2)";
      spec.g = "sqrt(x^2+3*x+4)";
      spec.a = 0.0;
      spec.b = 1.0;
      spec.k = {100.0};
      spec.M = {16, 32, 64, 128, 256, 512};
      spec.N = {1, 2, 3};
      spec.oracle_min_panels = 25600;
      break;
    case 2:
      spec.method = "mfcc2";
      spec.f = "(x-1)/(1+x^2)";
      spec.g = "sqrt(x^2+3*x+4)";
      spec.a = -1.0;
      spec.b = 1.0;
      spec.k = {100.0};
      spec.N = {2, 4, 8, 16, 32, 64};
      spec.s = {2, 3, 4, 5};
      break;
    case 3:
      spec.method = "graded";
      spec.f = "(x-1)/(1+x^2)";
      spec.g = "x^4";
      spec.a = 0.0;
      spec.b = 1.0;
      spec.k = {1000.0};
      spec.M = {100, 200, 400, 800};
      spec.N = {4, 6, 8};
      spec.n_order = 3;
      break;
    default:
      throw UsageError("--table must be 1, 2 or 3");
  }
  return spec;
}

void run_study(const StudySpec& spec, std::ostream& out) {
  validate(spec);
  out << csv_header << '\n';
  OracleConfig oc;
  oc.target_tol = spec.oracle_tol;
  oc.min_panels = spec.oracle_min_panels;
  const int p = spec.method == "mfcc2" ? 2 : 1;

  std::map<std::string, double> errors;  // predecessor lookup
  auto emit = [&](const Row& r, double err, const std::string& key, const std::string& pred) {
    errors[key] = err;
    std::string rate;
    if (auto it = errors.find(pred); it != errors.end() && err > 0.0 && it->second > 0.0) {
      rate = fmt(std::log2(it->second / err));
    }
    auto opt = [](const auto& v) { return v ? fmt(static_cast<double>(*v)) : std::string(); };
    out << spec.method << ',' << fmt(r.k) << ',' << opt(r.M) << ',' << r.N << ',' << opt(r.Nprime)
        << ',' << opt(r.s) << ',' << opt(r.q) << ',' << fmt(r.value.real()) << ','
        << fmt(r.value.imag()) << ',' << fmt(err) << ',' << rate << ','
        << fmt(std::pow(r.k, p) * err) << '\n';
    out.flush();
  };

  for (double k : spec.k) {
    const OscProblem problem = make_problem(spec.f, spec.g, spec.gprime, spec.a, spec.b, k);
    const complex ref = oracle_integrate(problem, oc);
    const std::string kk = fmt(k) + "|";
    if (spec.method == "fcc") {
      for (std::size_t N : spec.N) {
        Row r{k, {}, {}, {}, N, {}, fcc_linear(problem, N)};
        emit(r, std::abs(r.value - ref), kk + std::to_string(N), kk + std::to_string(N / 2));
      }
    } else if (spec.method == "mfcc1" || spec.method == "graded") {
      for (std::size_t N : spec.N) {
        std::optional<double> q;
        if (spec.method == "graded") q = spec.q.value_or(default_grading_exponent(N, *spec.n_order));
        const std::string base = kk + std::to_string(N) + "|";
        for (std::size_t M : spec.M) {
          Row r{k, M, {}, {}, N, q, {}};
          if (spec.method == "mfcc1") {
            r.Nprime = N;
            r.value = method1_integrate(problem, M, N).value;
          } else {
            GradedParams gp;
            gp.n_order = *spec.n_order;
            gp.N = N;
            gp.M = M;
            gp.q = q;
            r.value = graded_integrate(problem, gp).value;
          }
          const std::string pred = M % 2 == 0 ? base + std::to_string(M / 2) : std::string("-");
          emit(r, std::abs(r.value - ref), base + std::to_string(M), pred);
        }
      }
    } else {
      for (std::size_t s : spec.s) {
        const std::vector<std::size_t> nps = spec.Nprime.empty() ? std::vector<std::size_t>{0} : spec.Nprime;
        for (std::size_t np_choice : nps) {
          const std::string base = kk + std::to_string(s) + "|" + std::to_string(np_choice) + "|";
          for (std::size_t N : spec.N) {
            const std::size_t Np = np_choice ? np_choice
                                             : static_cast<std::size_t>(std::ceil(k * static_cast<double>(N)));
            Row r{k, {}, Np, s, N, {}, method2_integrate(problem, N, Np, s).value};
            const std::string pred = N % 2 == 0 ? base + std::to_string(N / 2) : std::string("-");
            emit(r, std::abs(r.value - ref), base + std::to_string(N), pred);
          }
        }
      }
    }
  }
}

}  // namespace mfcc::cli
