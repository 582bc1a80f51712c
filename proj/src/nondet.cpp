#include "nondet_agg/nondet.hpp"

#include <algorithm>

#include "nondet_agg/error.hpp"

namespace nda {

NonDet NonDet::of(std::vector<Value> outcomes) {
  std::sort(outcomes.begin(), outcomes.end(), [](const Value& a, const Value& b) { return compare(a, b) < 0; });
  outcomes.erase(std::unique(outcomes.begin(), outcomes.end()), outcomes.end());
  NonDet m;
  m.outcomes_ = std::move(outcomes);
  return m;
}

bool NonDet::contains(const Value& v) const {
  return std::binary_search(outcomes_.begin(), outcomes_.end(), v,
                            [](const Value& a, const Value& b) { return compare(a, b) < 0; });
}

std::string NonDet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    if (i) out += ",";
    out += outcomes_[i].to_string();
  }
  return out + "}";
}

NonDet pure(Value x) { return NonDet::of({std::move(x)}); }

NonDet mzero() { return NonDet{}; }

NonDet mplus(const NonDet& m, const NonDet& n) {
  std::vector<Value> out;
  out.reserve(m.size() + n.size());
  std::set_union(m.outcomes().begin(), m.outcomes().end(), n.outcomes().begin(), n.outcomes().end(),
                 std::back_inserter(out), [](const Value& a, const Value& b) { return compare(a, b) < 0; });
  return NonDet::of(std::move(out));
}

namespace {

[[noreturn]] void rethrow_with_input(const std::string& fname, const Value& x) {
  try {
    throw;
  } catch (const EvalError& e) {
    throw EvalError(fname + " failed on " + x.to_string() + ": " + e.what());
  } catch (const KindError& e) {
    throw KindError(fname + " failed on " + x.to_string() + ": " + e.what());
  }
}

}  // namespace

NonDet bind(const Kleisli& f, const NonDet& m) {
  std::vector<Value> out;
  for (const auto& x : m.outcomes()) {
    try {
      const NonDet r = f(x);
      out.insert(out.end(), r.outcomes().begin(), r.outcomes().end());
    } catch (const Error&) {
      rethrow_with_input(f.name, x);
    }
  }
  return NonDet::of(std::move(out));
}

NonDet fmap(const PureFn& g, const NonDet& m) {
  std::vector<Value> out;
  out.reserve(m.size());
  for (const auto& x : m.outcomes()) {
    try {
      out.push_back(g(x));
    } catch (const Error&) {
      rethrow_with_input(g.name, x);
    }
  }
  return NonDet::of(std::move(out));
}

NonDet then_left(const NonDet& m1, const NonDet& m2) {
  return bind(Kleisli{"const", [m1](const Value&) { return m1; }}, m2);
}

Kleisli lift(const PureFn& g) {
  return Kleisli{"return . " + g.name, [g](const Value& x) { return pure(g(x)); }, g.domain, g.codomain};
}

PureFn compose(const PureFn& f, const PureFn& g) {
  if (f.domain && g.codomain && *f.domain != *g.codomain) {
    throw KindError("cannot compose " + f.name + " after " + g.name + ": carrier mismatch");
  }
  return PureFn{"(" + f.name + " . " + g.name + ")", [f, g](const Value& x) { return f(g(x)); }, g.domain,
                f.codomain};
}

Kleisli compose(const Kleisli& k, const PureFn& g) {
  if (k.domain && g.codomain && *k.domain != *g.codomain) {
    throw KindError("cannot compose " + k.name + " after " + g.name + ": carrier mismatch");
  }
  return Kleisli{"(" + k.name + " . " + g.name + ")", [k, g](const Value& x) { return k(g(x)); }, g.domain,
                 k.codomain};
}

Kleisli kleisli_comp(const Kleisli& f, const Kleisli& g) {
  if (f.domain && g.codomain && *f.domain != *g.codomain) {
    throw KindError("cannot compose " + f.name + " <=< " + g.name + ": codomain " + to_string(*g.codomain) +
                    " does not match domain " + to_string(*f.domain));
  }
  return Kleisli{"(" + f.name + " <=< " + g.name + ")", [f, g](const Value& x) { return bind(f, g(x)); },
                 g.domain, f.codomain};
}

Kleisli mcomp(const PureFn& f, const Kleisli& g) {
  Kleisli k = kleisli_comp(lift(f), g);
  k.name = "(" + f.name + " <.> " + g.name + ")";
  return k;
}

PureFn identity_fn() {
  return PureFn{"id", [](const Value& x) { return x; }};
}

Kleisli return_arrow() {
  return Kleisli{"return", [](const Value& x) { return pure(x); }};
}

void check_total(const Kleisli& k, const std::vector<Value>& domain) {
  for (const auto& x : domain) {
    try {
      NonDet r = k(x);
      if (k.codomain) {
        for (const auto& v : r.outcomes()) {
          if (v.kind() != *k.codomain) {
            throw KindError("outcome " + v.to_string() + " is not of kind " + to_string(*k.codomain));
          }
        }
      }
    } catch (const Error& e) {
      throw EvalError(k.name + " is not total: fails on " + x.to_string() + ": " + e.what());
    }
  }
}

}  // namespace nda
