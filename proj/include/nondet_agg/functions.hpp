#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nondet_agg/nondet.hpp"

namespace nda {

struct Predicate {
  std::string name;
  std::function<bool(const Value&)> fn;

  bool operator()(const Value& v) const { return fn(v); }
};

// Registered, kind-polymorphic functions on scalar values (mod, int, float).
// Names are stable: they appear in reports and on the command line.
//
//   pure:       succ, negate, double, const0
//   predicates: is-even, is-zero, always-true, always-false
//   arrows:     return.succ  x -> {x+1}
//               choice-succ  x -> {x, x+1}
//               choice-neg   x -> {x, -x}
//               guard-nonzero x -> {} if x == 0 else {x}

PureFn pure_fn(std::string_view name);
Predicate predicate(std::string_view name);
Kleisli arrow(std::string_view name);

std::vector<std::string> pure_fn_names();
std::vector<std::string> predicate_names();
std::vector<std::string> arrow_names();

/// Function tables used by the monad-law suite by default.
std::vector<PureFn> default_pure_table();
std::vector<Kleisli> default_arrow_table();

}  // namespace nda
