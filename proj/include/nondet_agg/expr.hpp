#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "nondet_agg/value.hpp"

namespace nda {

enum class BinOp { Add, Sub, Mul, Div, Mod, Min, Max, Pow };

std::string_view symbol(BinOp op);

/// Immutable expression over the two bound variables `x` and `y`.
/// Subtrees are shared, so copies are cheap.
class OpExpr {
 public:
  struct Literal {
    std::string text;  // as written: digits, optional fraction and exponent
    bool operator==(const Literal&) const = default;
  };
  enum class Var { X, Y };
  struct Neg {
    std::shared_ptr<const OpExpr> arg;
  };
  struct Binary {
    BinOp op;
    std::shared_ptr<const OpExpr> lhs;
    std::shared_ptr<const OpExpr> rhs;
  };
  using Node = std::variant<Literal, Var, Neg, Binary>;

  static OpExpr literal(std::string text);
  static OpExpr var(Var v);
  static OpExpr neg(OpExpr e);
  static OpExpr binary(BinOp op, OpExpr lhs, OpExpr rhs);

  const Node& node() const noexcept { return *node_; }

  friend bool operator==(const OpExpr& a, const OpExpr& b);

 private:
  explicit OpExpr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
  std::shared_ptr<const Node> node_;
};

/// Parses an expression in `x`, `y`. Positions in errors are reported as
/// (line, column + offset) so callers can point into a larger document.
OpExpr parse_expr(std::string_view text, std::size_t line = 1, std::size_t column = 1);

/// Minimal-parenthesis rendering; parse_expr(print(e)) == e.
std::string print(const OpExpr& e);

/// Evaluates `e` with x := a, y := b. Literals take the kind of `b` (the
/// accumulator carrier). ModInt arithmetic reduces modulo the modulus;
/// Int64 arithmetic is overflow-checked; Float64 results must be finite.
/// Throws EvalError or KindError naming the inputs.
Value eval_binop(const OpExpr& e, const Value& a, const Value& b);

}  // namespace nda
