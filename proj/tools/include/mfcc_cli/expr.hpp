#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <mfcc/function.hpp>

namespace mfcc::cli {

struct Node;
using Expr = std::shared_ptr<const Node>;

enum class NodeKind { number, variable, constant, negate, add, sub, mul, div, pow, call };

enum class Func { sin, cos, tan, exp, log, sqrt, abs };

struct Node {
  NodeKind kind = NodeKind::number;
  double value = 0.0;  // number, or the value of a named constant
  std::string name;    // constant or function name
  Func func = Func::sin;
  Expr lhs, rhs;       // unary operand in lhs
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Grammar, loosest first: + -, then * /, then unary minus, then ^ (right
/// associative). Identifiers: x, pi, e, sin cos tan exp log sqrt abs.
/// Multiplication must be written out.
Expr parse_expr(std::string_view text);

/// Complex evaluation with principal branches. Integer exponents are
/// applied by repeated multiplication; abs is the complex modulus.
complex eval_expr(const Node& node, complex x);

/// Fully parenthesized text; numbers use 17 significant digits.
std::string to_string(const Node& node);

/// Structural equality (numbers compared exactly).
bool same_tree(const Node& a, const Node& b);

ComplexFn to_function(Expr expr);

}  // namespace mfcc::cli
