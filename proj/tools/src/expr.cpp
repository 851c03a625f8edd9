#include "mfcc_cli/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace mfcc::cli {

namespace {

struct FuncName {
  std::string_view name;
  Func func;
};

constexpr std::array<FuncName, 7> kFuncs{{{"sin", Func::sin},
                                          {"cos", Func::cos},
                                          {"tan", Func::tan},
                                          {"exp", Func::exp},
                                          {"log", Func::log},
                                          {"sqrt", Func::sqrt},
                                          {"abs", Func::abs}}};

Expr make(NodeKind kind, Expr lhs = nullptr, Expr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr run() {
    Expr e = expression();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "', expected operator or end");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expression() {
    Expr e = term();
    while (true) {
      if (accept('+')) e = make(NodeKind::add, e, term());
      else if (accept('-')) e = make(NodeKind::sub, e, term());
      else return e;
    }
  }

  Expr term() {
    Expr e = unary();
    while (true) {
      if (accept('*')) e = make(NodeKind::mul, e, unary());
      else if (accept('/')) e = make(NodeKind::div, e, unary());
      else return e;
    }
  }

  Expr unary() {
    if (accept('-')) return make(NodeKind::negate, unary());
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (accept('^')) return make(NodeKind::pow, base, unary());
    return base;
  }

  Expr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input, expected expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expression();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("unexpected '" + std::string(1, c) + "', expected expression");
  }

  Expr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_, ++n;
      return n;
    };
    std::size_t count = digits();
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      count += digits();
    }
    if (count == 0) fail("malformed number");
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < s_.size() && (s_[look] == '+' || s_[look] == '-')) ++look;
      if (look < s_.size() && std::isdigit(static_cast<unsigned char>(s_[look]))) {
        pos_ = look;
        digits();
      }
    }
    double v = 0.0;
    const auto res = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (res.ec != std::errc() || res.ptr != s_.data() + pos_) {
      pos_ = start;
      fail("number out of range");
    }
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::number;
    n->value = v;
    return n;
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view id = s_.substr(start, pos_ - start);
    if (id == "x") return make(NodeKind::variable);
    if (id == "pi" || id == "e") {
      auto n = std::make_shared<Node>();
      n->kind = NodeKind::constant;
      n->name = std::string(id);
      n->value = id == "pi" ? std::numbers::pi : std::numbers::e;
      return n;
    }
    for (const auto& f : kFuncs) {
      if (f.name != id) continue;
      if (!accept('(')) fail("expected '(' after " + std::string(id));
      Expr arg = expression();
      if (!accept(')')) fail("expected ')'");
      auto n = std::make_shared<Node>();
      n->kind = NodeKind::call;
      n->func = f.func;
      n->name = std::string(id);
      n->lhs = std::move(arg);
      return n;
    }
    pos_ = start;
    fail("unknown identifier '" + std::string(id) + "'");
  }
};

complex int_pow(complex base, long long n) {
  const bool invert = n < 0;
  unsigned long long m = invert ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
  complex result = 1.0;
  while (m) {
    if (m & 1) result *= base;
    base *= base;
    m >>= 1;
  }
  return invert ? 1.0 / result : result;
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).run(); }

complex eval_expr(const Node& node, complex x) {
  switch (node.kind) {
    case NodeKind::number:
    case NodeKind::constant:
      return node.value;
    case NodeKind::variable:
      return x;
    case NodeKind::negate:
      return -eval_expr(*node.lhs, x);
    case NodeKind::add:
      return eval_expr(*node.lhs, x) + eval_expr(*node.rhs, x);
    case NodeKind::sub:
      return eval_expr(*node.lhs, x) - eval_expr(*node.rhs, x);
    case NodeKind::mul:
      return eval_expr(*node.lhs, x) * eval_expr(*node.rhs, x);
    case NodeKind::div:
      return eval_expr(*node.lhs, x) / eval_expr(*node.rhs, x);
    case NodeKind::pow: {
      const complex base = eval_expr(*node.lhs, x);
      const complex ex = eval_expr(*node.rhs, x);
      if (ex.imag() == 0.0 && std::abs(ex.real()) <= 1024.0 && std::trunc(ex.real()) == ex.real()) {
        return int_pow(base, static_cast<long long>(ex.real()));
      }
      if (ex.imag() == 0.0) return std::pow(base, ex.real());
      return std::pow(base, ex);
    }
    case NodeKind::call: {
      const complex a = eval_expr(*node.lhs, x);
      switch (node.func) {
        case Func::sin: return std::sin(a);
        case Func::cos: return std::cos(a);
        case Func::tan: return std::tan(a);
        case Func::exp: return std::exp(a);
        case Func::log: return std::log(a);
        case Func::sqrt: return std::sqrt(a);
        case Func::abs: return std::abs(a);
      }
    }
  }
  return 0.0;
}

std::string to_string(const Node& node) {
  auto bin = [&](const char* op) {
    return "(" + to_string(*node.lhs) + " " + op + " " + to_string(*node.rhs) + ")";
  };
  switch (node.kind) {
    case NodeKind::number: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", node.value);
      return buf;
    }
    case NodeKind::variable: return "x";
    case NodeKind::constant: return node.name;
    case NodeKind::negate: return "(-" + to_string(*node.lhs) + ")";
    case NodeKind::add: return bin("+");
    case NodeKind::sub: return bin("-");
    case NodeKind::mul: return bin("*");
    case NodeKind::div: return bin("/");
    case NodeKind::pow: return bin("^");
    case NodeKind::call: return node.name + "(" + to_string(*node.lhs) + ")";
  }
  return {};
}

bool same_tree(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::number: return a.value == b.value;
    case NodeKind::variable: return true;
    case NodeKind::constant: return a.name == b.name;
    case NodeKind::negate: return same_tree(*a.lhs, *b.lhs);
    case NodeKind::call: return a.func == b.func && same_tree(*a.lhs, *b.lhs);
    default: return same_tree(*a.lhs, *b.lhs) && same_tree(*a.rhs, *b.rhs);
  }
}

ComplexFn to_function(Expr expr) {
  return [e = std::move(expr)](complex x) { return eval_expr(*e, x); };
}

}  // namespace mfcc::cli
