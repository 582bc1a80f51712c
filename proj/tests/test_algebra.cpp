#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "nondet_agg/carrier.hpp"
#include "nondet_agg/error.hpp"
#include "nondet_agg/expr.hpp"
#include "nondet_agg/opspec.hpp"
#include "nondet_agg/value.hpp"

using namespace nda;

namespace {

// Independent reference for the float total order: numeric order, with
// -0.0 before +0.0.
int float_order_oracle(double a, double b) {
  if (a < b) return -1;
  if (a > b) return 1;
  const bool na = std::signbit(a);
  const bool nb = std::signbit(b);
  if (na == nb) return 0;
  return na ? -1 : 1;
}

int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

Value m5(std::int64_t r) { return Value::mod(r, 5); }
Value i64(std::int64_t v) { return Value::integer(v); }

}  // namespace

TEST_CASE("mod values normalize their residue") {
  CHECK(Value::mod(-1, 5) == Value::mod(4, 5));
  CHECK(Value::mod(12, 5).as_mod().residue == 2);
  CHECK_THROWS_AS(Value::mod(0, 1), KindError);
}

TEST_CASE("floats must be finite") {
  CHECK_THROWS_AS(Value::real(std::numeric_limits<double>::infinity()), KindError);
  CHECK_THROWS_AS(Value::real(std::nan("")), KindError);
  CHECK(Value::real(-0.0).is_float());
}

TEST_CASE("values of different kinds do not compare") {
  CHECK_THROWS_AS((void)compare(Value::integer(1), Value::real(1.0)), KindError);
  CHECK_THROWS_AS((void)compare(Value::mod(1, 5), Value::mod(1, 7)), KindError);
  CHECK_THROWS_AS(Value::list({Value::integer(1), Value::mod(1, 3)}), KindError);
}

TEST_CASE("float order agrees with the reference order") {
  const std::vector<double> xs{-1e300, -2.5, -1.0, -std::numeric_limits<double>::denorm_min(), -0.0, 0.0,
                               std::numeric_limits<double>::denorm_min(), 1e-300, 1.0, 3.0, 1e16, 1e300};
  for (double a : xs) {
    for (double b : xs) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(sign(float_order(a, b)) == float_order_oracle(a, b));
      CHECK(sign(compare(Value::real(a), Value::real(b))) == float_order_oracle(a, b));
    }
  }
}

TEST_CASE("value printing") {
  CHECK(Value::real(1.0).to_string() == "1.0");
  CHECK(Value::real(-0.5).to_string() == "-0.5");
  CHECK(Value::integer(-3).to_string() == "-3");
  CHECK(m5(7).to_string() == "2");
  CHECK(Value::list({i64(1), i64(2)}).to_string() == "[1,2]");
  CHECK(Value::list({}).to_string() == "[]");
}

TEST_CASE("lists order lexicographically, shorter prefix first") {
  CHECK(Value::list({i64(1)}) < Value::list({i64(1), i64(0)}));
  CHECK(Value::list({i64(0), i64(5)}) < Value::list({i64(1)}));
  CHECK(Value::list({}) < Value::list({i64(0)}));
}

TEST_CASE("carrier text round-trips") {
  for (const char* text : {"mod 5", "int 0..3", "int -2..2", "float {-1.0, 0.5, 2.0}", "list 2 of mod 3"}) {
    CAPTURE(text);
    const CarrierSpec c = CarrierSpec::parse(text);
    CHECK(CarrierSpec::parse(c.to_string()) == c);
  }
  CHECK(CarrierSpec::parse("mod 5").size() == 5);
  CHECK(CarrierSpec::parse("int -2..2").size() == 5);
  CHECK(CarrierSpec::parse("float {2.0, 1.0, 2.0}").size() == 2);
  CHECK(CarrierSpec::parse("list 2 of mod 2").size() == 7);
}

TEST_CASE("bad carriers are rejected") {
  CHECK_THROWS_AS(CarrierSpec::parse("mod 1"), Error);
  CHECK_THROWS_AS(CarrierSpec::parse("int 3..1"), Error);
  CHECK_THROWS_AS(CarrierSpec::parse("ring 5"), ParseError);
  CHECK_THROWS_AS(CarrierSpec::parse("mod"), ParseError);
}

TEST_CASE("carrier enumeration is ascending") {
  const auto vs = enum_values(CarrierSpec::parse("int -1..2"));
  REQUIRE(vs.size() == 4);
  CHECK(vs.front() == i64(-1));
  CHECK(vs.back() == i64(2));
  const auto fs = enum_values(CarrierSpec::parse("float {3.0, -1.0, 0.0}"));
  CHECK(fs == std::vector<Value>{Value::real(-1.0), Value::real(0.0), Value::real(3.0)});
}

TEST_CASE("list enumeration: shortest first, then lexicographic") {
  const auto ls = enum_lists(CarrierSpec::mod(2), 2);
  const Value z = Value::mod(0, 2);
  const Value o = Value::mod(1, 2);
  const std::vector<ValList> expected{{}, {z}, {o}, {z, z}, {z, o}, {o, z}, {o, o}};
  CHECK(ls == expected);
  CHECK(count_lists(2, 2) == 7);
  CHECK(count_lists(3, 0) == 1);
  CHECK(count_lists(7, 4) == 2801);
  CHECK(enum_lists(CarrierSpec::mod(7), 4).size() == 2801);
}

TEST_CASE("expression printing round-trips through the parser") {
  for (const char* text : {"x + y", "x - (y - 1)", "x - y - 1", "max(x, y)", "min(x, y + 1) * 2", "-x + y",
                           "pow(x, 3)", "x / 2 % y", "x * (y + 1)", "x"}) {
    CAPTURE(text);
    const OpExpr e = parse_expr(text);
    CHECK(print(e) == text);
    CHECK(parse_expr(print(e)) == e);
  }
  CHECK(print(parse_expr("((x))+(y)")) == "x + y");
}

TEST_CASE("expression parse errors carry a column") {
  try {
    parse_expr("x + w");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_expr("x +"), ParseError);
  CHECK_THROWS_AS(parse_expr("foo(x, y)"), ParseError);
  CHECK_THROWS_AS(parse_expr("(x + y"), ParseError);
}

TEST_CASE("integer arithmetic") {
  const OpExpr add = parse_expr("x + y");
  CHECK(eval_binop(add, i64(2), i64(0)) == i64(2));
  CHECK(eval_binop(add, i64(-7), i64(3)) == i64(-4));
  CHECK(eval_binop(parse_expr("x - y"), i64(1), i64(2)) == i64(-1));
  CHECK(eval_binop(parse_expr("x * y"), i64(-3), i64(4)) == i64(-12));
  CHECK(eval_binop(parse_expr("x / y"), i64(7), i64(2)) == i64(3));
  CHECK(eval_binop(parse_expr("pow(x, 3)"), i64(-2), i64(0)) == i64(-8));
  CHECK_THROWS_AS(eval_binop(add, i64(std::numeric_limits<std::int64_t>::max()), i64(1)), EvalError);
  CHECK_THROWS_AS(eval_binop(parse_expr("x / y"), i64(1), i64(0)), EvalError);
  CHECK_THROWS_AS(eval_binop(parse_expr("pow(x, y)"), i64(2), i64(2)), EvalError);
}

TEST_CASE("modular arithmetic") {
  CHECK(eval_binop(parse_expr("x + y"), m5(3), m5(4)) == m5(2));
  CHECK(eval_binop(parse_expr("x - y"), m5(1), m5(3)) == m5(3));
  CHECK(eval_binop(parse_expr("x * y + 1"), m5(2), m5(2)) == m5(0));
  CHECK(eval_binop(parse_expr("pow(x, 4)"), m5(2), m5(0)) == m5(1));
  CHECK(eval_binop(parse_expr("x / y"), m5(4), m5(2)) == m5(2));
  CHECK_THROWS_AS(eval_binop(parse_expr("x / y"), m5(4), m5(0)), EvalError);
  CHECK(eval_binop(parse_expr("-x"), m5(1), m5(0)) == m5(4));
}

TEST_CASE("literals take the kind of y") {
  CHECK(eval_binop(parse_expr("x + 7"), m5(0), m5(0)) == m5(2));
  CHECK(eval_binop(parse_expr("y + 1"), i64(0), i64(5)) == i64(6));
  CHECK(eval_binop(parse_expr("y + 1"), Value::real(0.0), Value::real(0.5)) == Value::real(1.5));
  CHECK(eval_binop(parse_expr("x"), m5(3), m5(0)) == m5(3));
}

TEST_CASE("float arithmetic reports non-finite results") {
  const OpExpr add = parse_expr("x + y");
  CHECK(eval_binop(add, Value::real(1e16), Value::real(1.0)) == Value::real(1e16));
  CHECK_THROWS_AS(eval_binop(add, Value::real(1e308), Value::real(1e308)), EvalError);
}

TEST_CASE("min and max use the carrier order") {
  CHECK(eval_binop(parse_expr("max(x, y)"), i64(3), i64(-1)) == i64(3));
  CHECK(eval_binop(parse_expr("min(x, y)"), m5(4), m5(2)) == m5(2));
}

TEST_CASE("operator spec documents") {
  const OpSpec ops = parse_opspec(
      "# addition\n"
      "carrier_a: mod 5\n"
      "oplus: x + y   # merge\n"
      "otimes: x + y\n"
      "z: 0\n");
  CHECK(ops.carrier_b == CarrierSpec::mod(5));
  CHECK(ops.z == m5(0));
  CHECK(print(ops.oplus) == "x + y");
  CHECK(parse_opspec(ops.to_text()).carrier_a == ops.carrier_a);

  const OpSpec two = parse_opspec("carrier_a: int 0..3\ncarrier_b: int 0..12\noplus: max(x, y)\notimes: x + y\nz: -0\n");
  CHECK(two.carrier_b == CarrierSpec::int_range(0, 12));
  CHECK(two.z == i64(0));
}

TEST_CASE("operator spec errors name the line") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_opspec(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("carrier_a: mod 5\noplus: x + w\notimes: x\nz: 0\n") == 2);
  CHECK(line_of("carrier_a: mod 5\noplus: x\noplus: y\notimes: x\nz: 0\n") == 3);
  CHECK(line_of("carrier_a: mod 5\ncolour: red\n") == 2);
  CHECK(line_of("carrier_a: mod 5\noplus: x\notimes: x\nz: 0.5\n") == 4);
  CHECK(line_of("carrier_a: mod 5\noplus: x\notimes: x\n") != 0);
  CHECK(line_of("oplus: x\notimes: x\nz: 0\n") != 0);
}

TEST_CASE("operators are validated against the carriers at load") {
  CHECK_THROWS_AS(parse_opspec("carrier_a: mod 5\noplus: x / y\notimes: x\nz: 0\n"), ParseError);
  CHECK_THROWS_AS(parse_opspec("carrier_a: int 0..3\noplus: pow(x, y)\notimes: x\nz: 0\n"), ParseError);
  CHECK_NOTHROW(parse_opspec("carrier_a: int 0..3\noplus: pow(x, 2)\notimes: x\nz: 0\n"));
}
