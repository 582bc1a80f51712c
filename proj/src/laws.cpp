#include "nondet_agg/laws.hpp"

#include <cmath>
#include <functional>

#include "nondet_agg/error.hpp"
#include "nondet_agg/quantify.hpp"

namespace nda {

namespace {

using Witnesses = std::optional<std::vector<Witness>>;

// Combinations of `size` indices out of n, lexicographic.
void append_combinations(const std::vector<Value>& values, std::size_t size,
                         std::vector<NonDet>& out) {
  const std::size_t n = values.size();
  if (size > n) return;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    std::vector<Value> pick;
    pick.reserve(size);
    for (std::size_t i : idx) pick.push_back(values[i]);
    out.push_back(NonDet::of(std::move(pick)));
    std::size_t k = size;
    while (k > 0 && idx[k - 1] == n - size + k - 1) --k;
    if (k == 0) return;
    ++idx[k - 1];
    for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Witnesses differ(std::vector<Witness> inputs, const NonDet& lhs, const NonDet& rhs) {
  if (lhs == rhs) return std::nullopt;
  inputs.push_back({"lhs", lhs.to_string()});
  inputs.push_back({"rhs", rhs.to_string()});
  return inputs;
}

Witness w(std::string name, const NonDet& m) { return {std::move(name), m.to_string()}; }
Witness w(std::string name, const Value& v) { return {std::move(name), v.to_string()}; }
Witness w(std::string name, const PureFn& f) { return {std::move(name), f.name}; }
Witness w(std::string name, const Kleisli& k) { return {std::move(name), k.name}; }

struct Domains {
  const std::vector<Value>& xs;
  const std::vector<NonDet>& sets;
  const std::vector<NonDet>& nonempty;
  const std::vector<PureFn>& fns;
  const std::vector<Kleisli>& arrows;

  std::size_t X() const { return xs.size(); }
  std::size_t S() const { return sets.size(); }
  std::size_t N() const { return nonempty.size(); }
  std::size_t F() const { return fns.size(); }
  std::size_t K() const { return arrows.size(); }
};

struct Law {
  std::string id;
  std::string anchor;
  std::function<std::vector<std::size_t>(const Domains&)> dims;
  std::function<Witnesses(const Domains&, const Instance&)> check;
};

std::vector<Law> catalogue() {
  std::vector<Law> laws;
  laws.push_back({"monad-left-identity", "monad law: left identity",
                  [](const Domains& d) { return std::vector{d.K(), d.X()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& f = d.arrows[i[0]];
                    const auto& x = d.xs[i[1]];
                    return differ({w("f", f), w("x", x)}, bind(f, pure(x)), f(x));
                  }});
  laws.push_back({"monad-right-identity", "monad law: right identity",
                  [](const Domains& d) { return std::vector{d.S()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& m = d.sets[i[0]];
                    return differ({w("m", m)}, bind(return_arrow(), m), m);
                  }});
  laws.push_back({"monad-associativity", "monad law: associativity",
                  [](const Domains& d) { return std::vector{d.K(), d.K(), d.S()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& f = d.arrows[i[0]];
                    const auto& g = d.arrows[i[1]];
                    const auto& m = d.sets[i[2]];
                    return differ({w("f", f), w("g", g), w("m", m)}, bind(f, bind(g, m)),
                                  bind(kleisli_comp(f, g), m));
                  }});
  laws.push_back({"mplus-monoid", "choice is a monoid with identity mzero",
                  [](const Domains& d) { return std::vector{d.S(), d.S(), d.S()}; },
                  [](const Domains& d, const Instance& i) -> Witnesses {
                    const auto& a = d.sets[i[0]];
                    const auto& b = d.sets[i[1]];
                    const auto& c = d.sets[i[2]];
                    std::vector<Witness> in{w("m1", a), w("m2", b), w("m3", c)};
                    if (auto r = differ(in, mplus(mplus(a, b), c), mplus(a, mplus(b, c)))) return r;
                    if (auto r = differ(in, mplus(mzero(), a), a)) return r;
                    return differ(in, mplus(a, mzero()), a);
                  }});
  laws.push_back({"bind-mplus-dist", "bind distributes over choice",
                  [](const Domains& d) { return std::vector{d.K(), d.S(), d.S()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& f = d.arrows[i[0]];
                    const auto& m = d.sets[i[1]];
                    const auto& n = d.sets[i[2]];
                    return differ({w("f", f), w("m1", m), w("m2", n)}, bind(f, mplus(m, n)),
                                  mplus(bind(f, m), bind(f, n)));
                  }});
  laws.push_back({"bind-mzero-zero", "mzero is a zero of bind",
                  [](const Domains& d) { return std::vector{d.K()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& f = d.arrows[i[0]];
                    return differ({w("f", f)}, bind(f, mzero()), mzero());
                  }});
  laws.push_back({"mplus-commutative", "choice is commutative",
                  [](const Domains& d) { return std::vector{d.S(), d.S()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& m = d.sets[i[0]];
                    const auto& n = d.sets[i[1]];
                    return differ({w("m1", m), w("m2", n)}, mplus(m, n), mplus(n, m));
                  }});
  laws.push_back({"mplus-idempotent", "choice is idempotent",
                  [](const Domains& d) { return std::vector{d.S()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& m = d.sets[i[0]];
                    return differ({w("m", m)}, mplus(m, m), m);
                  }});
  laws.push_back({"ap-return", "fmap over return",
                  [](const Domains& d) { return std::vector{d.F(), d.X()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& f = d.fns[i[0]];
                    const auto& x = d.xs[i[1]];
                    return differ({w("f", f), w("x", x)}, fmap(f, pure(x)), pure(f(x)));
                  }});
  laws.push_back({"ap-mzero", "fmap over mzero",
                  [](const Domains& d) { return std::vector{d.F()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& f = d.fns[i[0]];
                    return differ({w("f", f)}, fmap(f, mzero()), mzero());
                  }});
  laws.push_back({"ap-mplus", "fmap distributes over choice",
                  [](const Domains& d) { return std::vector{d.F(), d.S(), d.S()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& f = d.fns[i[0]];
                    const auto& m = d.sets[i[1]];
                    const auto& n = d.sets[i[2]];
                    return differ({w("f", f), w("m1", m), w("m2", n)}, fmap(f, mplus(m, n)),
                                  mplus(fmap(f, m), fmap(f, n)));
                  }});
  laws.push_back({"comp-ap", "monadic composition applied",
                  [](const Domains& d) { return std::vector{d.F(), d.K(), d.X()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& f = d.fns[i[0]];
                    const auto& g = d.arrows[i[1]];
                    const auto& x = d.xs[i[2]];
                    return differ({w("f", f), w("g", g), w("x", x)}, mcomp(f, g)(x), fmap(f, g(x)));
                  }});
  laws.push_back({"comp-ap-ap", "fmap of a composition",
                  [](const Domains& d) { return std::vector{d.F(), d.F(), d.S()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& f = d.fns[i[0]];
                    const auto& g = d.fns[i[1]];
                    const auto& m = d.sets[i[2]];
                    return differ({w("f", f), w("g", g), w("m", m)}, fmap(compose(f, g), m),
                                  fmap(f, fmap(g, m)));
                  }});
  laws.push_back({"comp-mcomp-mcomp", "pure composition before monadic composition",
                  [](const Domains& d) { return std::vector{d.F(), d.F(), d.K(), d.X()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& f = d.fns[i[0]];
                    const auto& g = d.fns[i[1]];
                    const auto& h = d.arrows[i[2]];
                    const auto& x = d.xs[i[3]];
                    return differ({w("f", f), w("g", g), w("h", h), w("x", x)},
                                  mcomp(compose(f, g), h)(x), mcomp(f, mcomp(g, h))(x));
                  }});
  laws.push_back({"mcomp-comp-mcomp", "monadic composition after a pure function",
                  [](const Domains& d) { return std::vector{d.F(), d.K(), d.F(), d.X()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& f = d.fns[i[0]];
                    const auto& g = d.arrows[i[1]];
                    const auto& h = d.fns[i[2]];
                    const auto& x = d.xs[i[3]];
                    return differ({w("f", f), w("g", g), w("h", h), w("x", x)},
                                  mcomp(f, compose(g, h))(x), compose(mcomp(f, g), h)(x));
                  }});
  laws.push_back({"comp-bind-ap", "bind after fmap",
                  [](const Domains& d) { return std::vector{d.K(), d.F(), d.S()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& f = d.arrows[i[0]];
                    const auto& g = d.fns[i[1]];
                    const auto& m = d.sets[i[2]];
                    return differ({w("f", f), w("g", g), w("m", m)}, bind(f, fmap(g, m)),
                                  bind(compose(f, g), m));
                  }});
  laws.push_back({"mcomp-bind-ap", "fmap after bind",
                  [](const Domains& d) { return std::vector{d.F(), d.K(), d.S()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& f = d.fns[i[0]];
                    const auto& g = d.arrows[i[1]];
                    const auto& m = d.sets[i[2]];
                    return differ({w("f", f), w("g", g), w("m", m)}, fmap(f, bind(g, m)),
                                  bind(mcomp(f, g), m));
                  }});
  laws.push_back({"kc-mcomp", "Kleisli composition with a monadic composition",
                  [](const Domains& d) { return std::vector{d.K(), d.F(), d.K(), d.X()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& f = d.arrows[i[0]];
                    const auto& g = d.fns[i[1]];
                    const auto& h = d.arrows[i[2]];
                    const auto& x = d.xs[i[3]];
                    return differ({w("f", f), w("g", g), w("h", h), w("x", x)},
                                  kleisli_comp(f, mcomp(g, h))(x), kleisli_comp(compose(f, g), h)(x));
                  }});
  laws.push_back({"mcomp-kc", "monadic composition with a Kleisli composition",
                  [](const Domains& d) { return std::vector{d.F(), d.K(), d.K(), d.X()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& f = d.fns[i[0]];
                    const auto& g = d.arrows[i[1]];
                    const auto& h = d.arrows[i[2]];
                    const auto& x = d.xs[i[3]];
                    return differ({w("f", f), w("g", g), w("h", h), w("x", x)},
                                  mcomp(f, kleisli_comp(g, h))(x), kleisli_comp(mcomp(f, g), h)(x));
                  }});
  laws.push_back({"bind-comp-bind", "bind after bind",
                  [](const Domains& d) { return std::vector{d.K(), d.K(), d.S()}; },
                  [](const Domains& d, const Instance& i) {
                    const auto& f = d.arrows[i[0]];
                    const auto& g = d.arrows[i[1]];
                    const auto& m = d.sets[i[2]];
                    Kleisli fg{"(" + f.name + " =<<) . " + g.name,
                               [f, g](const Value& x) { return bind(f, g(x)); }};
                    return differ({w("f", f), w("g", g), w("m", m)}, bind(f, bind(g, m)), bind(fg, m));
                  }});
  laws.push_back({"mplus-return", "a choice yielding a single outcome has that outcome on both sides",
                  [](const Domains& d) { return std::vector{d.N(), d.N()}; },
                  [](const Domains& d, const Instance& i) -> Witnesses {
                    const auto& m = d.nonempty[i[0]];
                    const auto& n = d.nonempty[i[1]];
                    const NonDet u = mplus(m, n);
                    if (u.size() != 1 || (m == u && n == u)) return std::nullopt;
                    return std::vector<Witness>{w("m1", m), w("m2", n), w("m1 || m2", u)};
                  }});
  laws.push_back({"return-injective", "return is injective",
                  [](const Domains& d) { return std::vector{d.X(), d.X()}; },
                  [](const Domains& d, const Instance& i) -> Witnesses {
                    const auto& x = d.xs[i[0]];
                    const auto& y = d.xs[i[1]];
                    if (pure(x) != pure(y) || x == y) return std::nullopt;
                    return std::vector<Witness>{w("x", x), w("y", y)};
                  }});
  return laws;
}

}  // namespace

std::vector<NonDet> enum_subsets(const std::vector<Value>& values, std::size_t max_size) {
  std::vector<NonDet> out;
  for (std::size_t size = 0; size <= max_size && size <= values.size(); ++size) {
    append_combinations(values, size, out);
  }
  return out;
}

const std::vector<std::string>& law_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& l : catalogue()) out.push_back(l.id);
    return out;
  }();
  return ids;
}

Report check_monad_laws(const CarrierSpec& carrier, const std::vector<Kleisli>& arrows,
                        std::size_t set_bound, const std::vector<PureFn>& fns) {
  const std::vector<Value> xs = enum_values(carrier);
  if (xs.empty()) throw UsageError("carrier " + carrier.to_string() + " is empty");
  if (arrows.empty()) throw UsageError("the Kleisli table is empty");
  if (fns.empty()) throw UsageError("the pure-function table is empty");
  if (set_bound == 0) throw UsageError("--set-bound must be at least 1");

  const std::vector<NonDet> sets = enum_subsets(xs, set_bound);
  const double cube = std::pow(static_cast<double>(sets.size()), 3.0);
  if (cube > 5e6) {
    throw UsageError(std::to_string(sets.size()) + " outcome sets of size <= " + std::to_string(set_bound) +
                     " over " + carrier.to_string() + " is too many for the cubic laws; use a smaller --set-bound");
  }
  std::vector<NonDet> nonempty(sets.begin() + 1, sets.end());

  for (const auto& k : arrows) check_total(k, xs);

  Domains d{xs, sets, nonempty, fns, arrows};
  Report report;
  report.command = "laws";
  report.bounds = {{"carrier", carrier.to_string()},
                   {"set_bound", std::to_string(set_bound)},
                   {"outcome_sets", std::to_string(sets.size())},
                   {"pure_fns", std::to_string(fns.size())},
                   {"arrows", std::to_string(arrows.size())}};
  for (const auto& law : catalogue()) {
    report.records.push_back(
        quantify(law.id, law.anchor, law.dims(d), [&](const Instance& i) { return law.check(d, i); }));
  }
  report.exit_status = exit_status_for(report.records);
  return report;
}

}  // namespace nda
