#include "nondet_agg/expr.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <limits>

#include "nondet_agg/error.hpp"

namespace nda {

std::string_view symbol(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Mod: return "%";
    case BinOp::Min: return "min";
    case BinOp::Max: return "max";
    case BinOp::Pow: return "pow";
  }
  return "?";
}

OpExpr OpExpr::literal(std::string text) { return OpExpr(Node(Literal{std::move(text)})); }

OpExpr OpExpr::var(Var v) { return OpExpr(Node(v)); }

OpExpr OpExpr::neg(OpExpr e) { return OpExpr(Node(Neg{std::make_shared<const OpExpr>(std::move(e))})); }

OpExpr OpExpr::binary(BinOp op, OpExpr lhs, OpExpr rhs) {
  return OpExpr(Node(Binary{op, std::make_shared<const OpExpr>(std::move(lhs)),
                            std::make_shared<const OpExpr>(std::move(rhs))}));
}

bool operator==(const OpExpr& a, const OpExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& na = a.node();
  const auto& nb = b.node();
  if (na.index() != nb.index()) return false;
  if (auto* l = std::get_if<OpExpr::Literal>(&na)) return *l == std::get<OpExpr::Literal>(nb);
  if (auto* v = std::get_if<OpExpr::Var>(&na)) return *v == std::get<OpExpr::Var>(nb);
  if (auto* n = std::get_if<OpExpr::Neg>(&na)) return *n->arg == *std::get<OpExpr::Neg>(nb).arg;
  const auto& ba = std::get<OpExpr::Binary>(na);
  const auto& bb = std::get<OpExpr::Binary>(nb);
  return ba.op == bb.op && *ba.lhs == *bb.lhs && *ba.rhs == *bb.rhs;
}

// ---------------------------------------------------------------------------
// Parser
//
//   expr  := sum
//   sum   := prod (("+" | "-") prod)*
//   prod  := unary (("*" | "/" | "%") unary)*
//   unary := "-" unary | atom
//   atom  := number | "x" | "y" | "(" expr ")" | ("min" | "max" | "pow") "(" expr "," expr ")"

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line), column_(column) {}

  OpExpr parse() {
    OpExpr e = sum();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(message, line_, column_ + pos);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(pos_ < text_.size() ? "expected '" + std::string(1, c) + "' but found '" +
                                     std::string(1, text_[pos_]) + "'"
                               : "expected '" + std::string(1, c) + "' at end of expression");
    }
  }

  OpExpr sum() {
    OpExpr lhs = prod();
    for (;;) {
      if (accept('+')) {
        lhs = OpExpr::binary(BinOp::Add, lhs, prod());
      } else if (accept('-')) {
        lhs = OpExpr::binary(BinOp::Sub, lhs, prod());
      } else {
        return lhs;
      }
    }
  }

  OpExpr prod() {
    OpExpr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = OpExpr::binary(BinOp::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = OpExpr::binary(BinOp::Div, lhs, unary());
      } else if (accept('%')) {
        lhs = OpExpr::binary(BinOp::Mod, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  OpExpr unary() {
    if (accept('-')) return OpExpr::neg(unary());
    return atom();
  }

  OpExpr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (accept('(')) {
      OpExpr e = sum();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (name == "x") return OpExpr::var(OpExpr::Var::X);
      if (name == "y") return OpExpr::var(OpExpr::Var::Y);
      BinOp op;
      if (name == "min") {
        op = BinOp::Min;
      } else if (name == "max") {
        op = BinOp::Max;
      } else if (name == "pow") {
        op = BinOp::Pow;
      } else {
        skip_ws();
        bool call = pos_ < text_.size() && text_[pos_] == '(';
        fail_at(start, (call ? "unknown function " : "unknown variable ") + name);
      }
      expect('(');
      OpExpr lhs = sum();
      expect(',');
      OpExpr rhs = sum();
      expect(')');
      return OpExpr::binary(op, lhs, rhs);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  OpExpr number() {
    std::size_t start = pos_;
    auto digits = [&] {
      std::size_t before = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ - before;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) fail_at(mark, "malformed exponent");
    }
    return OpExpr::literal(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

}  // namespace

OpExpr parse_expr(std::string_view text, std::size_t line, std::size_t column) {
  return ExprParser(text, line, column).parse();
}

// ---------------------------------------------------------------------------
// Printer

namespace {

// 0 = sum, 1 = prod, 2 = unary, 3 = atom
int precedence(const OpExpr& e) {
  const auto& n = e.node();
  if (std::holds_alternative<OpExpr::Neg>(n)) return 2;
  if (auto* b = std::get_if<OpExpr::Binary>(&n)) {
    switch (b->op) {
      case BinOp::Add:
      case BinOp::Sub: return 0;
      case BinOp::Mul:
      case BinOp::Div:
      case BinOp::Mod: return 1;
      default: return 3;
    }
  }
  return 3;
}

std::string print_at(const OpExpr& e, int level) {
  std::string out;
  const auto& n = e.node();
  if (auto* l = std::get_if<OpExpr::Literal>(&n)) {
    out = l->text;
  } else if (auto* v = std::get_if<OpExpr::Var>(&n)) {
    out = *v == OpExpr::Var::X ? "x" : "y";
  } else if (auto* g = std::get_if<OpExpr::Neg>(&n)) {
    out = "-" + print_at(*g->arg, 2);
  } else {
    const auto& b = std::get<OpExpr::Binary>(n);
    int p = precedence(e);
    if (p == 3) {
      out = std::string(symbol(b.op)) + "(" + print_at(*b.lhs, 0) + ", " + print_at(*b.rhs, 0) + ")";
    } else {
      out = print_at(*b.lhs, p) + " " + std::string(symbol(b.op)) + " " + print_at(*b.rhs, p + 1);
    }
  }
  return precedence(e) < level ? "(" + out + ")" : out;
}

}  // namespace

std::string print(const OpExpr& e) { return print_at(e, 0); }

// ---------------------------------------------------------------------------
// Evaluator

namespace {

bool is_integer_text(const std::string& text) {
  return text.find_first_of(".eE") == std::string::npos;
}

std::int64_t parse_int_literal(const std::string& text) {
  if (!is_integer_text(text)) throw KindError("literal " + text + " is not an integer");
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw EvalError("integer literal " + text + " out of range");
  }
  return v;
}

Value literal_value(const std::string& text, const Value& context) {
  switch (context.kind()) {
    case Kind::ModInt: {
      std::int64_t m = context.as_mod().modulus;
      if (!is_integer_text(text)) throw KindError("literal " + text + " is not an integer");
      // Reduce digit by digit so literals wider than int64 still work.
      std::int64_t r = 0;
      for (char c : text) r = static_cast<std::int64_t>((static_cast<__int128>(r) * 10 + (c - '0')) % m);
      return Value::mod(r, m);
    }
    case Kind::Int64: return Value::integer(parse_int_literal(text));
    case Kind::Float64: {
      double d = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
      if (ec != std::errc() || !std::isfinite(d)) throw EvalError("float literal " + text + " out of range");
      return Value::real(d);
    }
    case Kind::List: break;
  }
  throw KindError("numeric literal " + text + " used with a list value");
}

Value checked_real(double d, const char* what) {
  if (!std::isfinite(d)) throw EvalError(std::string("non-finite result of ") + what);
  return Value::real(d);
}

template <class Op>
Value checked(Op op, std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t out = 0;
  if (op(a, b, &out)) throw EvalError(std::string("int64 overflow in ") + what);
  return Value::integer(out);
}

Value arith(BinOp op, const Value& l, const Value& r) {
  if (!l.same_kind(r)) {
    throw KindError("kind mismatch in '" + std::string(symbol(op)) + "': " + l.to_string() + " (" +
                    to_string(l.kind()) + ") and " + r.to_string() + " (" + to_string(r.kind()) + ")");
  }
  if (op == BinOp::Min) return compare(l, r) <= 0 ? l : r;
  if (op == BinOp::Max) return compare(l, r) >= 0 ? l : r;

  switch (l.kind()) {
    case Kind::ModInt: {
      std::int64_t m = l.as_mod().modulus;
      __int128 a = l.as_mod().residue;
      __int128 b = r.as_mod().residue;
      switch (op) {
        case BinOp::Add: return Value::mod(static_cast<std::int64_t>((a + b) % m), m);
        case BinOp::Sub: return Value::mod(static_cast<std::int64_t>((a - b + m) % m), m);
        case BinOp::Mul: return Value::mod(static_cast<std::int64_t>((a * b) % m), m);
        case BinOp::Div:
          if (b == 0) throw EvalError("division by zero");
          return Value::mod(static_cast<std::int64_t>(a / b), m);
        case BinOp::Mod:
          if (b == 0) throw EvalError("modulo by zero");
          return Value::mod(static_cast<std::int64_t>(a % b), m);
        default: break;
      }
      break;
    }
    case Kind::Int64: {
      std::int64_t a = l.as_int();
      std::int64_t b = r.as_int();
      using I = std::int64_t;
      switch (op) {
        case BinOp::Add: return checked([](I x, I y, I* o) { return __builtin_add_overflow(x, y, o); }, a, b, "+");
        case BinOp::Sub: return checked([](I x, I y, I* o) { return __builtin_sub_overflow(x, y, o); }, a, b, "-");
        case BinOp::Mul: return checked([](I x, I y, I* o) { return __builtin_mul_overflow(x, y, o); }, a, b, "*");
        case BinOp::Div:
          if (b == 0) throw EvalError("division by zero");
          if (a == std::numeric_limits<std::int64_t>::min() && b == -1) throw EvalError("int64 overflow in /");
          return Value::integer(a / b);
        case BinOp::Mod:
          if (b == 0) throw EvalError("modulo by zero");
          if (b == -1) return Value::integer(0);
          return Value::integer(a % b);
        default: break;
      }
      break;
    }
    case Kind::Float64: {
      double a = l.as_float();
      double b = r.as_float();
      switch (op) {
        case BinOp::Add: return checked_real(a + b, "+");
        case BinOp::Sub: return checked_real(a - b, "-");
        case BinOp::Mul: return checked_real(a * b, "*");
        case BinOp::Div:
          if (b == 0) throw EvalError("division by zero");
          return checked_real(a / b, "/");
        case BinOp::Mod:
          if (b == 0) throw EvalError("modulo by zero");
          return checked_real(std::fmod(a, b), "%");
        case BinOp::Pow: return checked_real(std::pow(a, b), "pow");
        default: break;
      }
      break;
    }
    case Kind::List: break;
  }
  throw KindError("operator '" + std::string(symbol(op)) + "' is not defined on " + to_string(l.kind()) +
                  " values");
}

Value int_power(const Value& base, std::uint64_t exponent) {
  if (base.is_mod()) {
    std::int64_t m = base.as_mod().modulus;
    __int128 result = 1 % m;
    __int128 b = base.as_mod().residue;
    while (exponent) {
      if (exponent & 1) result = (result * b) % m;
      b = (b * b) % m;
      exponent >>= 1;
    }
    return Value::mod(static_cast<std::int64_t>(result), m);
  }
  std::int64_t b = base.as_int();
  if (exponent == 0) return Value::integer(1);
  if (b == 0 || b == 1) return Value::integer(b);
  if (b == -1) return Value::integer(exponent % 2 == 0 ? 1 : -1);
  // |b| >= 2 overflows within 63 steps, so the loop is short.
  std::int64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(result, b, &result)) throw EvalError("int64 overflow in pow");
  }
  return Value::integer(result);
}

Value eval(const OpExpr& e, const Value& a, const Value& b) {
  const auto& n = e.node();
  if (auto* l = std::get_if<OpExpr::Literal>(&n)) return literal_value(l->text, b);
  if (auto* v = std::get_if<OpExpr::Var>(&n)) return *v == OpExpr::Var::X ? a : b;
  if (auto* g = std::get_if<OpExpr::Neg>(&n)) {
    Value v = eval(*g->arg, a, b);
    switch (v.kind()) {
      case Kind::ModInt: return Value::mod(-v.as_mod().residue, v.as_mod().modulus);
      case Kind::Int64:
        if (v.as_int() == std::numeric_limits<std::int64_t>::min()) throw EvalError("int64 overflow in negation");
        return Value::integer(-v.as_int());
      case Kind::Float64: return Value::real(-v.as_float());
      case Kind::List: throw KindError("negation is not defined on list values");
    }
  }
  const auto& bin = std::get<OpExpr::Binary>(n);
  if (bin.op == BinOp::Pow) {
    Value base = eval(*bin.lhs, a, b);
    if (base.is_float()) return arith(BinOp::Pow, base, eval(*bin.rhs, a, b));
    if (base.is_mod() || base.is_int()) {
      const auto* lit = std::get_if<OpExpr::Literal>(&bin.rhs->node());
      if (!lit || !is_integer_text(lit->text)) {
        throw EvalError("pow on " + to_string(base.kind()) + " values needs a nonnegative integer literal exponent");
      }
      return int_power(base, static_cast<std::uint64_t>(parse_int_literal(lit->text)));
    }
    throw KindError("pow is not defined on list values");
  }
  return arith(bin.op, eval(*bin.lhs, a, b), eval(*bin.rhs, a, b));
}

}  // namespace

Value eval_binop(const OpExpr& e, const Value& a, const Value& b) {
  auto context = [&] { return " in '" + print(e) + "' at x=" + a.to_string() + ", y=" + b.to_string(); };
  try {
    return eval(e, a, b);
  } catch (const EvalError& err) {
    throw EvalError(err.what() + context());
  } catch (const KindError& err) {
    throw KindError(err.what() + context());
  }
}

}  // namespace nda
