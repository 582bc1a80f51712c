#pragma once

#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "nondet_agg/value.hpp"

namespace nda {

/// A finite non-deterministic computation, represented by its set of
/// possible outcomes. Outcomes are kept strictly ascending, so set equality
/// is structural equality and choice is commutative and idempotent.
class NonDet {
 public:
  NonDet() = default;

  /// Canonicalizes an arbitrary outcome sequence (sort + dedupe).
  static NonDet of(std::vector<Value> outcomes);
  static NonDet of(std::initializer_list<Value> outcomes) { return of(std::vector<Value>(outcomes)); }

  const std::vector<Value>& outcomes() const noexcept { return outcomes_; }
  std::size_t size() const noexcept { return outcomes_.size(); }
  bool empty() const noexcept { return outcomes_.empty(); }
  bool contains(const Value& v) const;

  std::string to_string() const;

  bool operator==(const NonDet&) const = default;

 private:
  std::vector<Value> outcomes_;
};

/// Pure function a -> b with a printable name. Unset domain/codomain
/// kinds mean the function is kind-polymorphic.
struct PureFn {
  std::string name;
  std::function<Value(const Value&)> fn;
  std::optional<Kind> domain = std::nullopt;
  std::optional<Kind> codomain = std::nullopt;

  Value operator()(const Value& v) const { return fn(v); }
};

/// Monadic arrow a -> M b with a printable name.
struct Kleisli {
  std::string name;
  std::function<NonDet(const Value&)> fn;
  std::optional<Kind> domain = std::nullopt;
  std::optional<Kind> codomain = std::nullopt;

  NonDet operator()(const Value& v) const { return fn(v); }
};

/// return
NonDet pure(Value x);

/// ∅
NonDet mzero();

/// m ‖ n
NonDet mplus(const NonDet& m, const NonDet& n);

/// f =<< m. Errors raised by f propagate with the offending outcome named.
NonDet bind(const Kleisli& f, const NonDet& m);

/// f <$> m = (return . f) =<< m
NonDet fmap(const PureFn& g, const NonDet& m);

/// m1 << m2 = const m1 =<< m2: m1 when m2 has an outcome, otherwise ∅.
NonDet then_left(const NonDet& m1, const NonDet& m2);

/// return . g
Kleisli lift(const PureFn& g);

/// f . g on pure functions.
PureFn compose(const PureFn& f, const PureFn& g);

/// k . g: the pure g first, then the arrow k.
Kleisli compose(const Kleisli& k, const PureFn& g);

/// (f <=< g) x = f =<< g x. Throws KindError when g's declared codomain
/// differs from f's declared domain.
Kleisli kleisli_comp(const Kleisli& f, const Kleisli& g);

/// (f <•> g) = (return . f) <=< g
Kleisli mcomp(const PureFn& f, const Kleisli& g);

/// Identity and the Kleisli identity (return).
PureFn identity_fn();
Kleisli return_arrow();

/// Checks that `k` yields a value of carrier kind on every listed input.
/// Throws EvalError naming the first input on which it fails.
void check_total(const Kleisli& k, const std::vector<Value>& domain);

}  // namespace nda
