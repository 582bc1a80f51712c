#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "nondet_agg/error.hpp"
#include "nondet_agg/functions.hpp"
#include "nondet_agg/laws.hpp"
#include "nondet_agg/nondet.hpp"
#include "nondet_agg/parallel.hpp"
#include "nondet_agg/quantify.hpp"

using namespace nda;

namespace {

Value m5(std::int64_t r) { return Value::mod(r, 5); }

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("outcome sets are canonical") {
  const NonDet a = NonDet::of({m5(3), m5(1), m5(3)});
  CHECK(a.size() == 2);
  CHECK(a.outcomes().front() == m5(1));
  CHECK(a == NonDet::of({m5(1), m5(3)}));
  CHECK(a.to_string() == "{1,3}");
  CHECK(mzero().empty());
  CHECK(mzero().to_string() == "{}");
}

TEST_CASE("choice is set union") {
  const NonDet a = NonDet::of({m5(0), m5(1)});
  const NonDet b = NonDet::of({m5(1), m5(2)});
  CHECK(mplus(a, b) == NonDet::of({m5(0), m5(1), m5(2)}));
  CHECK(mplus(a, mzero()) == a);
  CHECK(mplus(a, a) == a);
}

TEST_CASE("bind, fmap and the compositions") {
  const Kleisli branch = arrow("choice-succ");
  const PureFn dbl = pure_fn("double");
  const NonDet m = NonDet::of({m5(0), m5(2)});
  CHECK(bind(branch, m) == NonDet::of({m5(0), m5(1), m5(2), m5(3)}));
  CHECK(fmap(dbl, m) == NonDet::of({m5(0), m5(4)}));
  CHECK(kleisli_comp(branch, branch)(m5(0)) == NonDet::of({m5(0), m5(1), m5(2)}));
  CHECK(mcomp(dbl, branch)(m5(1)) == NonDet::of({m5(2), m5(4)}));
  CHECK(compose(dbl, pure_fn("succ"))(m5(1)) == m5(4));
  CHECK(compose(branch, dbl)(m5(1)) == NonDet::of({m5(2), m5(3)}));
  CHECK(bind(arrow("guard-nonzero"), NonDet::of({m5(0), m5(3)})) == NonDet::of({m5(3)}));
  CHECK(bind(return_arrow(), m) == m);
  CHECK(identity_fn()(m5(4)) == m5(4));
}

TEST_CASE("then_left keeps the left side only when the right has an outcome") {
  const NonDet a = NonDet::of({m5(1)});
  CHECK(then_left(a, NonDet::of({m5(3), m5(4)})) == a);
  CHECK(then_left(a, mzero()) == mzero());
}

TEST_CASE("kleisli composition checks declared kinds") {
  Kleisli to_int{"to-int", [](const Value& v) { return pure(Value::integer(v.as_mod().residue)); }, Kind::ModInt,
                 Kind::Int64};
  Kleisli on_mod{"on-mod", [](const Value& v) { return pure(v); }, Kind::ModInt, Kind::ModInt};
  CHECK_THROWS_AS(kleisli_comp(on_mod, to_int), KindError);
  CHECK_NOTHROW(kleisli_comp(to_int, on_mod));
}

TEST_CASE("errors inside bind name the function") {
  Kleisli boom{"boom", [](const Value&) -> NonDet { throw EvalError("bad"); }};
  try {
    bind(boom, NonDet::of({m5(1)}));
    FAIL("expected an error");
  } catch (const EvalError& e) {
    CHECK(std::string(e.what()).find("boom") != std::string::npos);
  }
}

TEST_CASE("registered functions") {
  CHECK(pure_fn("succ")(Value::integer(3)) == Value::integer(4));
  CHECK(pure_fn("negate")(m5(1)) == m5(4));
  CHECK(pure_fn("const0")(Value::real(2.5)) == Value::real(0.0));
  CHECK(predicate("is-even")(Value::integer(-2)));
  CHECK_FALSE(predicate("is-zero")(m5(3)));
  CHECK(arrow("choice-neg")(m5(2)) == NonDet::of({m5(2), m5(3)}));
  CHECK(arrow("return.succ")(m5(4)) == NonDet::of({m5(0)}));
  CHECK_THROWS_AS(pure_fn("nope"), UsageError);
  CHECK(default_arrow_table().size() >= 3);
  CHECK(pure_fn_names().size() == default_pure_table().size());
}

TEST_CASE("subset enumeration matches the binomial count and order") {
  std::vector<Value> xs;
  for (int i = 0; i < 5; ++i) xs.push_back(m5(i));
  for (std::size_t bound = 0; bound <= 5; ++bound) {
    std::size_t expected = 0;
    for (std::size_t k = 0; k <= bound; ++k) expected += binomial(5, k);
    CHECK(enum_subsets(xs, bound).size() == expected);
  }
  const auto sets = enum_subsets(xs, 2);
  CHECK(sets[0] == mzero());
  CHECK(sets[1] == NonDet::of({m5(0)}));
  CHECK(sets[6] == NonDet::of({m5(0), m5(1)}));
  CHECK(sets.back() == NonDet::of({m5(3), m5(4)}));
}

TEST_CASE("unrestricted mplus-return fails on an empty operand") {
  // The catalogue quantifies this law over nonempty operands only.
  const NonDet one = pure(m5(1));
  CHECK(mplus(mzero(), one) == one);
  CHECK(mzero() != one);
}

TEST_CASE("mixed-radix decoding") {
  CHECK(decode(0, {2, 3}) == Instance{0, 0});
  CHECK(decode(5, {2, 3}) == Instance{1, 2});
  CHECK(domain_size({2, 3, 4}) == 24);
  CHECK(domain_size({2, 0}) == 0);
  CHECK_THROWS_AS(domain_size({kMaxInstances, 2}), UsageError);
}

TEST_CASE("sequence decoding follows list enumeration order") {
  CHECK(count_sequences(3, 2) == 13);
  CHECK(decode_sequence(0, 3, 2).empty());
  CHECK(decode_sequence(1, 3, 2) == std::vector<std::size_t>{0});
  CHECK(decode_sequence(4, 3, 2) == std::vector<std::size_t>{0, 0});
  CHECK(decode_sequence(12, 3, 2) == std::vector<std::size_t>{2, 2});
}

TEST_CASE("quantify reports the first counterexample") {
  auto rec = quantify("t", "test", {10, 10}, [](const Instance& i) -> std::optional<std::vector<Witness>> {
    if (i[0] * i[1] < 12) return std::nullopt;
    return std::vector<Witness>{{"i", std::to_string(i[0])}, {"j", std::to_string(i[1])}};
  });
  CHECK(rec.verdict == Verdict::Fail);
  CHECK(rec.witness("i")->value == "2");
  CHECK(rec.witness("j")->value == "6");
  CHECK(rec.instances == 27);
}

TEST_CASE("parallel helpers do not depend on the worker count") {
  for (const char* workers : {"1", "2", "7"}) {
    setenv("NONDET_AGG_THREADS", workers, 1);
    CHECK(find_first(1000, [](std::size_t i) { return i % 97 == 96 || i == 500; }) == std::optional<std::size_t>(96));
    CHECK_FALSE(find_first(1000, [](std::size_t) { return false; }).has_value());
    const auto sq = parallel_map<std::size_t>(50, [](std::size_t i) { return i * i; });
    CHECK(sq[49] == 49 * 49);
    CHECK_THROWS_AS(parallel_map<int>(20,
                                      [](std::size_t i) -> int {
                                        if (i >= 5) throw UsageError(std::to_string(i));
                                        return 0;
                                      }),
                    UsageError);
  }
  setenv("NONDET_AGG_THREADS", "0", 1);
  CHECK_THROWS_AS(worker_count(), UsageError);
  setenv("NONDET_AGG_THREADS", "two", 1);
  CHECK_THROWS_AS(worker_count(), UsageError);
  unsetenv("NONDET_AGG_THREADS");
  CHECK(worker_count() >= 1);
}
