#include "nondet_agg/permlib.hpp"

#include "nondet_agg/error.hpp"
#include "nondet_agg/quantify.hpp"

namespace nda {

namespace {

using Witnesses = std::optional<std::vector<Witness>>;

Witnesses differ(std::vector<Witness> inputs, const NonDet& lhs, const NonDet& rhs) {
  if (lhs == rhs) return std::nullopt;
  inputs.push_back({"lhs", lhs.to_string()});
  inputs.push_back({"rhs", rhs.to_string()});
  return inputs;
}

Report single(std::string command, std::vector<std::pair<std::string, std::string>> bounds,
              CheckRecord rec) {
  Report r;
  r.command = std::move(command);
  r.bounds = std::move(bounds);
  r.records.push_back(std::move(rec));
  r.exit_status = exit_status_for(r.records);
  return r;
}

PureFn fold_fn(const FoldSpec& f) {
  return PureFn{"foldr(" + print(f.odot) + ", " + f.z.to_string() + ")",
                [f](const Value& xs) { return foldr_list(f.odot, f.z, xs.as_list()); }};
}

PureFn map_fn(const PureFn& g) {
  return PureFn{"map " + g.name, [g](const Value& xs) { return Value::list(map_list(g, xs.as_list())); }};
}

PureFn filter_fn(const Predicate& p) {
  return PureFn{"filter " + p.name,
                [p](const Value& xs) { return Value::list(filter_list(p, xs.as_list())); }};
}

std::vector<std::pair<std::string, std::string>> list_bounds(const CarrierSpec& ca, std::size_t max_len) {
  return {{"carrier_a", ca.to_string()}, {"max_len", std::to_string(max_len)}};
}

}  // namespace

void check_max_len(std::size_t max_len) {
  if (max_len > kMaxLenCap) {
    throw UsageError("max_len " + std::to_string(max_len) + " exceeds the cap of " + std::to_string(kMaxLenCap));
  }
}

NonDet insert(const Value& x, const ValList& xs) {
  if (xs.empty()) return pure(Value::list({x}));
  ValList here;
  here.reserve(xs.size() + 1);
  here.push_back(x);
  here.insert(here.end(), xs.begin(), xs.end());
  const Value& y = xs.front();
  PureFn cons{"(" + y.to_string() + ":)", [&y](const Value& ys) {
                ValList out;
                out.reserve(ys.as_list().size() + 1);
                out.push_back(y);
                const auto& tail = ys.as_list();
                out.insert(out.end(), tail.begin(), tail.end());
                return Value::list(std::move(out));
              }};
  return mplus(pure(Value::list(std::move(here))), fmap(cons, insert(x, ValList(xs.begin() + 1, xs.end()))));
}

NonDet perm(const ValList& xs) {
  NonDet m = pure(Value::list({}));
  for (std::size_t i = xs.size(); i-- > 0;) {
    const Value& x = xs[i];
    Kleisli ins{"insert " + x.to_string(), [&x](const Value& ys) { return insert(x, ys.as_list()); }};
    m = bind(ins, m);
  }
  return m;
}

Value foldr_list(const OpExpr& op, const Value& z, const ValList& xs) {
  Value acc = z;
  for (std::size_t i = xs.size(); i-- > 0;) acc = eval_binop(op, xs[i], acc);
  return acc;
}

ValList map_list(const PureFn& g, const ValList& xs) {
  ValList out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(g(x));
  return out;
}

ValList filter_list(const Predicate& p, const ValList& xs) {
  ValList out;
  for (const auto& x : xs) {
    if (p(x)) out.push_back(x);
  }
  return out;
}

Report check_exchange_odot(const FoldSpec& f, const CarrierSpec& ca, const CarrierSpec& cb) {
  const auto as = enum_values(ca);
  const auto bs = enum_values(cb);
  auto rec = quantify("exchange-odot", "exchange condition of Lemma fold-perm", {as.size(), as.size(), bs.size()},
                      [&](const Instance& i) -> Witnesses {
                        const Value& x = as[i[0]];
                        const Value& y = as[i[1]];
                        const Value& w = bs[i[2]];
                        Value lhs = eval_binop(f.odot, x, eval_binop(f.odot, y, w));
                        Value rhs = eval_binop(f.odot, y, eval_binop(f.odot, x, w));
                        if (lhs == rhs) return std::nullopt;
                        return std::vector<Witness>{{"x", x.to_string()},
                                                    {"y", y.to_string()},
                                                    {"w", w.to_string()},
                                                    {"lhs", lhs.to_string()},
                                                    {"rhs", rhs.to_string()}};
                      });
  return single("exchange-odot", {{"odot", print(f.odot)}, {"carrier_a", ca.to_string()}, {"carrier_b", cb.to_string()}},
                std::move(rec));
}

Report check_lemma_fold_perm(const FoldSpec& f, const CarrierSpec& ca, const CarrierSpec& cb,
                             std::size_t max_len) {
  check_max_len(max_len);
  const auto lists = enum_lists(ca, max_len);
  const PureFn fold = fold_fn(f);
  auto rec = quantify("fold-perm", "Lemma fold-perm", {lists.size()}, [&](const Instance& i) {
    Value xs = Value::list(lists[i[0]]);
    return differ({{"xs", xs.to_string()}}, fmap(fold, perm(lists[i[0]])), pure(fold(xs)));
  });
  auto bounds = list_bounds(ca, max_len);
  bounds.emplace_back("carrier_b", cb.to_string());
  bounds.emplace_back("odot", print(f.odot));
  return single("fold-perm", std::move(bounds), std::move(rec));
}

Report check_lemma_fold_insert(const FoldSpec& f, const CarrierSpec& ca, const CarrierSpec& cb,
                               std::size_t max_len) {
  check_max_len(max_len);
  const auto as = enum_values(ca);
  const auto lists = enum_lists(ca, max_len);
  const PureFn fold = fold_fn(f);
  auto rec = quantify("fold-insert", "Lemma fold-insert", {as.size(), lists.size()}, [&](const Instance& i) {
    const Value& x = as[i[0]];
    const ValList& xs = lists[i[1]];
    ValList xxs{x};
    xxs.insert(xxs.end(), xs.begin(), xs.end());
    return differ({{"x", x.to_string()}, {"xs", to_string(xs)}}, fmap(fold, insert(x, xs)),
                  pure(foldr_list(f.odot, f.z, xxs)));
  });
  auto bounds = list_bounds(ca, max_len);
  bounds.emplace_back("carrier_b", cb.to_string());
  bounds.emplace_back("odot", print(f.odot));
  return single("fold-insert", std::move(bounds), std::move(rec));
}

Report check_lemma_perm_map(const PureFn& g, const CarrierSpec& ca, std::size_t max_len) {
  check_max_len(max_len);
  const auto lists = enum_lists(ca, max_len);
  const PureFn mg = map_fn(g);
  auto rec = quantify("shuffle-map", "Lemma shuffle-map", {lists.size()}, [&](const Instance& i) {
    const ValList& xs = lists[i[0]];
    return differ({{"g", g.name}, {"xs", to_string(xs)}}, perm(map_list(g, xs)), fmap(mg, perm(xs)));
  });
  auto bounds = list_bounds(ca, max_len);
  bounds.emplace_back("g", g.name);
  return single("shuffle-map", std::move(bounds), std::move(rec));
}

Report check_lemma_insert_map(const PureFn& g, const CarrierSpec& ca, std::size_t max_len) {
  check_max_len(max_len);
  const auto as = enum_values(ca);
  const auto lists = enum_lists(ca, max_len);
  const PureFn mg = map_fn(g);
  auto rec = quantify("insert-map", "Lemma insert-map", {as.size(), lists.size()}, [&](const Instance& i) {
    const Value& x = as[i[0]];
    const ValList& xs = lists[i[1]];
    return differ({{"g", g.name}, {"x", x.to_string()}, {"xs", to_string(xs)}}, insert(g(x), map_list(g, xs)),
                  fmap(mg, insert(x, xs)));
  });
  auto bounds = list_bounds(ca, max_len);
  bounds.emplace_back("g", g.name);
  return single("insert-map", std::move(bounds), std::move(rec));
}

Report check_lemma_perm_filter(const Predicate& p, const CarrierSpec& ca, std::size_t max_len) {
  check_max_len(max_len);
  const auto lists = enum_lists(ca, max_len);
  const PureFn fp = filter_fn(p);
  auto rec = quantify("perm-filter", "Lemma perm-filter", {lists.size()}, [&](const Instance& i) {
    const ValList& xs = lists[i[0]];
    return differ({{"p", p.name}, {"xs", to_string(xs)}}, perm(filter_list(p, xs)), fmap(fp, perm(xs)));
  });
  auto bounds = list_bounds(ca, max_len);
  bounds.emplace_back("p", p.name);
  return single("perm-filter", std::move(bounds), std::move(rec));
}

Report check_lemma_perm_id(const CarrierSpec& ca, std::size_t max_len) {
  check_max_len(max_len);
  const auto lists = enum_lists(ca, max_len);
  auto rec = quantify("perm-id", "Lemma perm-id", {lists.size()}, [&](const Instance& i) -> Witnesses {
    Value xs = Value::list(lists[i[0]]);
    NonDet ps = perm(lists[i[0]]);
    if (ps.contains(xs)) return std::nullopt;
    return std::vector<Witness>{{"xs", xs.to_string()}, {"perm xs", ps.to_string()}};
  });
  return single("perm-id", list_bounds(ca, max_len), std::move(rec));
}

}  // namespace nda
