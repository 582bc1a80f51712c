#include "nondet_agg/functions.hpp"

#include <cmath>

#include "nondet_agg/error.hpp"

namespace nda {

namespace {

Value zero_like(const Value& v) {
  switch (v.kind()) {
    case Kind::ModInt: return Value::mod(0, v.as_mod().modulus);
    case Kind::Int64: return Value::integer(0);
    case Kind::Float64: return Value::real(0.0);
    case Kind::List: break;
  }
  throw KindError("no zero for list value " + v.to_string());
}

Value add(const Value& a, const Value& b) {
  switch (a.kind()) {
    case Kind::ModInt: return Value::mod(a.as_mod().residue + b.as_mod().residue, a.as_mod().modulus);
    case Kind::Int64: {
      std::int64_t out = 0;
      if (__builtin_add_overflow(a.as_int(), b.as_int(), &out)) throw EvalError("int64 overflow");
      return Value::integer(out);
    }
    case Kind::Float64: return Value::real(a.as_float() + b.as_float());
    case Kind::List: break;
  }
  throw KindError("arithmetic on list value " + a.to_string());
}

Value one_like(const Value& v) {
  switch (v.kind()) {
    case Kind::ModInt: return Value::mod(1, v.as_mod().modulus);
    case Kind::Int64: return Value::integer(1);
    case Kind::Float64: return Value::real(1.0);
    case Kind::List: break;
  }
  throw KindError("no one for list value " + v.to_string());
}

Value negate(const Value& v) {
  switch (v.kind()) {
    case Kind::ModInt: return Value::mod(-v.as_mod().residue, v.as_mod().modulus);
    case Kind::Int64:
      if (v.as_int() == INT64_MIN) throw EvalError("int64 overflow in negation");
      return Value::integer(-v.as_int());
    case Kind::Float64: return Value::real(-v.as_float());
    case Kind::List: break;
  }
  throw KindError("cannot negate list value " + v.to_string());
}

bool is_even(const Value& v) {
  switch (v.kind()) {
    case Kind::ModInt: return v.as_mod().residue % 2 == 0;
    case Kind::Int64: return v.as_int() % 2 == 0;
    case Kind::Float64: return std::fmod(v.as_float(), 2.0) == 0.0;
    case Kind::List: break;
  }
  throw KindError("parity of list value " + v.to_string());
}

}  // namespace

PureFn pure_fn(std::string_view name) {
  if (name == "succ") return PureFn{"succ", [](const Value& x) { return add(x, one_like(x)); }};
  if (name == "negate") return PureFn{"negate", negate};
  if (name == "double") return PureFn{"double", [](const Value& x) { return add(x, x); }};
  if (name == "const0") return PureFn{"const0", zero_like};
  throw UsageError("unknown function '" + std::string(name) + "'");
}

Predicate predicate(std::string_view name) {
  if (name == "is-even") return Predicate{"is-even", is_even};
  if (name == "is-zero") return Predicate{"is-zero", [](const Value& x) { return x == zero_like(x); }};
  if (name == "always-true") return Predicate{"always-true", [](const Value&) { return true; }};
  if (name == "always-false") return Predicate{"always-false", [](const Value&) { return false; }};
  throw UsageError("unknown predicate '" + std::string(name) + "'");
}

Kleisli arrow(std::string_view name) {
  if (name == "return.succ") {
    Kleisli k = lift(pure_fn("succ"));
    k.name = "return.succ";
    return k;
  }
  if (name == "choice-succ") {
    return Kleisli{"choice-succ", [](const Value& x) { return NonDet::of({x, add(x, one_like(x))}); }};
  }
  if (name == "choice-neg") {
    return Kleisli{"choice-neg", [](const Value& x) { return NonDet::of({x, negate(x)}); }};
  }
  if (name == "guard-nonzero") {
    return Kleisli{"guard-nonzero", [](const Value& x) { return x == zero_like(x) ? mzero() : pure(x); }};
  }
  throw UsageError("unknown arrow '" + std::string(name) + "'");
}

std::vector<std::string> pure_fn_names() { return {"succ", "negate", "double", "const0"}; }

std::vector<std::string> predicate_names() { return {"is-even", "is-zero", "always-true", "always-false"}; }

std::vector<std::string> arrow_names() { return {"return.succ", "choice-succ", "choice-neg", "guard-nonzero"}; }

std::vector<PureFn> default_pure_table() {
  std::vector<PureFn> out;
  for (const auto& n : pure_fn_names()) out.push_back(pure_fn(n));
  return out;
}

std::vector<Kleisli> default_arrow_table() {
  std::vector<Kleisli> out;
  for (const auto& n : arrow_names()) out.push_back(arrow(n));
  return out;
}

}  // namespace nda
