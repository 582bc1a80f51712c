#include "nondet_agg/sparkagg.hpp"

#include <cmath>

#include "nondet_agg/error.hpp"
#include "nondet_agg/homlib.hpp"
#include "nondet_agg/parallel.hpp"
#include "nondet_agg/permlib.hpp"
#include "nondet_agg/quantify.hpp"

namespace nda {

namespace {

using Witnesses = std::optional<std::vector<Witness>>;
using Bounds = std::vector<std::pair<std::string, std::string>>;

constexpr const char* kOutOfScopeNote =
    "desk-scale analogue only: the full-scale cluster result range -8192.0..12288.0 is out of scope";

// Lazily decoded RDD space; avoids materializing millions of RDDs.
struct RddSpace {
  std::vector<ValList> parts;
  std::size_t max_parts;
  std::size_t size;

  RddSpace(const CarrierSpec& ca, std::size_t p, std::size_t l)
      : parts(enum_lists(ca, l)), max_parts(p), size(count_sequences(parts.size(), p)) {}

  Rdd at(std::size_t i) const {
    Rdd rdd;
    for (std::size_t k : decode_sequence(i, parts.size(), max_parts)) rdd.push_back(parts[k]);
    return rdd;
  }
};

Report make_report(std::string command, Bounds bounds, std::vector<CheckRecord> records) {
  Report r;
  r.command = std::move(command);
  r.bounds = std::move(bounds);
  r.records = std::move(records);
  r.exit_status = exit_status_for(r.records);
  return r;
}

Bounds rdd_bounds(const OpSpec& ops, std::size_t max_parts, std::size_t max_len) {
  return {{"oplus", print(ops.oplus)},
          {"otimes", print(ops.otimes)},
          {"z", ops.z.to_string()},
          {"carrier_a", ops.carrier_a.to_string()},
          {"carrier_b", ops.carrier_b.to_string()},
          {"max_parts", std::to_string(max_parts)},
          {"max_len", std::to_string(max_len)}};
}

std::string at_bounds(std::size_t p, std::size_t l) {
  return "verified at bounds (P=" + std::to_string(p) + ", L=" + std::to_string(l) + ")";
}

Value fold_part(const OpSpec& ops, const ValList& part) { return foldr_list(ops.otimes, ops.z, part); }

ValList part_folds(const OpSpec& ops, const Rdd& rdd) {
  ValList out;
  out.reserve(rdd.size());
  for (const auto& p : rdd) out.push_back(fold_part(ops, p));
  return out;
}

Value sequential(const OpSpec& ops, const Rdd& rdd) {
  return foldr_list(ops.oplus, ops.z, part_folds(ops, rdd));
}

Value fold_concat(const OpSpec& ops, const Rdd& rdd) { return foldr_list(ops.otimes, ops.z, concat(rdd)); }

void append_prefixed(std::vector<Witness>& out, const std::string& prefix, const CheckRecord& r) {
  for (const auto& w : r.witnesses) out.push_back({prefix + "." + w.name, w.value});
}

std::string holds(const CheckRecord& r) { return r.verdict == Verdict::Pass ? "holds" : "fails"; }

CheckRecord assoc_record(const OpExpr& op, const std::vector<Value>& vs, const std::string& id) {
  return quantify(id, "", {vs.size(), vs.size(), vs.size()}, [&](const Instance& i) -> Witnesses {
    const Value& x = vs[i[0]];
    const Value& y = vs[i[1]];
    const Value& w = vs[i[2]];
    Value lhs = eval_binop(op, x, eval_binop(op, y, w));
    Value rhs = eval_binop(op, eval_binop(op, x, y), w);
    if (lhs == rhs) return std::nullopt;
    return std::vector<Witness>{{"x", x.to_string()}, {"y", y.to_string()}, {"w", w.to_string()},
                                {"x (+) (y (+) w)", lhs.to_string()}, {"(x (+) y) (+) w", rhs.to_string()}};
  });
}

CheckRecord comm_record(const OpExpr& op, const std::vector<Value>& vs, const std::string& id) {
  return quantify(id, "", {vs.size(), vs.size()}, [&](const Instance& i) -> Witnesses {
    const Value& x = vs[i[0]];
    const Value& y = vs[i[1]];
    Value lhs = eval_binop(op, x, y);
    Value rhs = eval_binop(op, y, x);
    if (lhs == rhs) return std::nullopt;
    return std::vector<Witness>{
        {"x", x.to_string()}, {"y", y.to_string()}, {"x (+) y", lhs.to_string()}, {"y (+) x", rhs.to_string()}};
  });
}

CheckRecord identity_record(const OpExpr& op, const Value& z, const std::vector<Value>& vs, const std::string& id) {
  return quantify(id, "", {vs.size()}, [&](const Instance& i) -> Witnesses {
    const Value& y = vs[i[0]];
    Value l = eval_binop(op, z, y);
    Value r = eval_binop(op, y, z);
    if (l == y && r == y) return std::nullopt;
    return std::vector<Witness>{{"y", y.to_string()}, {"z (+) y", l.to_string()}, {"y (+) z", r.to_string()}};
  });
}

std::string image_text(const ImageSet& img) {
  std::string s = "{";
  for (std::size_t i = 0; i < img.values.size(); ++i) s += (i ? "," : "") + img.values[i].to_string();
  return s + "}";
}

bool is_float(const OpSpec& ops) {
  return ops.carrier_b.kind() == Kind::Float64 || ops.carrier_a.kind() == Kind::Float64;
}

CheckRecord skipped(std::string id, std::string anchor, std::string why) {
  CheckRecord rec;
  rec.id = std::move(id);
  rec.anchor = std::move(anchor);
  rec.verdict = Verdict::Skipped;
  rec.detail = std::move(why);
  return rec;
}

CheckRecord not_met(std::string id, std::string anchor, const std::vector<std::pair<std::string, const CheckRecord*>>& gates) {
  CheckRecord rec;
  rec.id = std::move(id);
  rec.anchor = std::move(anchor);
  rec.verdict = Verdict::HypothesisNotMet;
  std::string failed;
  for (const auto& [name, g] : gates) {
    rec.instances += g->instances;
    rec.witnesses.push_back({name, holds(*g)});
    if (g->verdict != Verdict::Pass) {
      append_prefixed(rec.witnesses, name, *g);
      failed += (failed.empty() ? "" : ", ") + name;
    }
  }
  rec.detail = "hypothesis not met: " + failed;
  return rec;
}

// aggregate = {foldr(⊗, z, concat xss)} on every enumerated RDD.
CheckRecord concat_gate(const OpSpec& ops, const RddSpace& space) {
  return quantify("gate", "", {space.size}, [&](const Instance& i) -> Witnesses {
    const Rdd rdd = space.at(i[0]);
    NonDet lhs = aggregate(ops, rdd);
    NonDet rhs = pure(fold_concat(ops, rdd));
    if (lhs == rhs) return std::nullopt;
    return std::vector<Witness>{{"rdd", to_string(rdd)}, {"aggregate", lhs.to_string()}, {"foldr concat", rhs.to_string()}};
  });
}

}  // namespace

std::string to_string(const Rdd& rdd) {
  std::string s = "[";
  for (std::size_t i = 0; i < rdd.size(); ++i) s += (i ? "," : "") + to_string(rdd[i]);
  return s + "]";
}

NonDet aggregate(const OpSpec& ops, const Rdd& rdd) {
  PureFn merge{"foldr(" + print(ops.oplus) + ", " + ops.z.to_string() + ")",
               [&ops](const Value& ys) { return foldr_list(ops.oplus, ops.z, ys.as_list()); }};
  return fmap(merge, perm(part_folds(ops, rdd)));
}

std::size_t count_rdds(const CarrierSpec& ca, std::size_t max_parts, std::size_t max_len) {
  return count_sequences(count_lists(ca.size(), max_len), max_parts);
}

std::vector<Rdd> enumerate_rdds(const CarrierSpec& ca, std::size_t max_parts, std::size_t max_len) {
  const std::size_t n = count_rdds(ca, max_parts, max_len);
  if (n > kMaxEnumeration) throw UsageError("too many RDDs to enumerate (" + std::to_string(n) + ")");
  RddSpace space(ca, max_parts, max_len);
  std::vector<Rdd> out;
  out.reserve(space.size);
  for (std::size_t i = 0; i < space.size; ++i) out.push_back(space.at(i));
  return out;
}

void check_rdd_guards(const CarrierSpec& ca, std::size_t max_parts, std::size_t max_len, bool override_guards) {
  check_max_len(max_len);
  if (override_guards) return;
  if (max_parts > kMaxPartsCap) {
    throw UsageError("max_parts " + std::to_string(max_parts) + " exceeds " + std::to_string(kMaxPartsCap) +
                     " (" + std::to_string(kMaxPartsCap) + "! merge orders); pass --override-guards to force");
  }
  const std::size_t n = count_rdds(ca, max_parts, max_len);
  if (n > kMaxRdds) {
    throw UsageError(std::to_string(n) + " RDDs at max_parts=" + std::to_string(max_parts) + ", max_len=" +
                     std::to_string(max_len) + " exceeds the budget of " + std::to_string(kMaxRdds) +
                     "; lower the bounds or pass --override-guards");
  }
}

CheckRecord DeterminismVerdict::to_record() const {
  CheckRecord rec;
  rec.id = "determinism";
  rec.anchor = "aggregate determinism by enumeration";
  rec.verdict = deterministic ? Verdict::Pass : Verdict::Fail;
  rec.instances = rdds_checked;
  rec.witnesses.push_back({"rdds_checked", std::to_string(rdds_checked)});
  rec.witnesses.push_back({"outcome_count_max", std::to_string(outcome_count_max)});
  if (counterexample) {
    rec.witnesses.push_back({"rdd", to_string(counterexample->first)});
    rec.witnesses.push_back({"outcomes", counterexample->second.to_string()});
  }
  rec.detail = deterministic ? "deterministic at bounds (P=" + std::to_string(max_parts) + ", L=" + std::to_string(max_len) + ")"
                             : "NONDETERMINISTIC; first counterexample RDD " + to_string(counterexample->first);
  return rec;
}

DeterminismVerdict check_determinism(const OpSpec& ops, std::size_t max_parts, std::size_t max_len,
                                     bool override_guards) {
  check_rdd_guards(ops.carrier_a, max_parts, max_len, override_guards);
  RddSpace space(ops.carrier_a, max_parts, max_len);
  const auto counts =
      parallel_map<std::size_t>(space.size, [&](std::size_t i) { return aggregate(ops, space.at(i)).size(); });
  DeterminismVerdict v;
  v.max_parts = max_parts;
  v.max_len = max_len;
  v.rdds_checked = space.size;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    v.outcome_count_max = std::max(v.outcome_count_max, counts[i]);
    if (counts[i] != 1 && !v.counterexample) {
      Rdd rdd = space.at(i);
      NonDet outcomes = aggregate(ops, rdd);
      v.counterexample.emplace(std::move(rdd), std::move(outcomes));
      v.deterministic = false;
    }
  }
  return v;
}

Report predict_determinism(const OpSpec& ops, std::size_t image_bound) {
  Bounds bounds{{"oplus", print(ops.oplus)}, {"carrier_b", ops.carrier_b.to_string()},
                {"image_bound", std::to_string(image_bound)}};
  const std::string anchor = "Theorem aggregate-det (hypothesis)";
  if (is_float(ops)) {
    return make_report("predict", std::move(bounds),
                       {skipped("predict-determinism", anchor,
                                "float carrier: floating-point addition is not associative, so no algebraic "
                                "prediction is attempted")});
  }
  const auto bs = enum_values(ops.carrier_b);
  const ImageSet img = image_set(ops.otimes, ops.z, ops.carrier_a, image_bound);
  bounds.emplace_back("image", image_text(img));
  bounds.emplace_back("image_saturated", img.saturated ? "yes" : "no");

  const CheckRecord ca = assoc_record(ops.oplus, bs, "carrier.associative");
  const CheckRecord cc = comm_record(ops.oplus, bs, "carrier.commutative");
  const CheckRecord ia = assoc_record(ops.oplus, img.values, "image.associative");
  const CheckRecord ic = comm_record(ops.oplus, img.values, "image.commutative");

  CheckRecord rec;
  rec.id = "predict-determinism";
  rec.anchor = anchor;
  const bool predicts = ca.verdict == Verdict::Pass && cc.verdict == Verdict::Pass;
  rec.verdict = predicts ? Verdict::Pass : Verdict::Fail;
  rec.instances = ca.instances + cc.instances + ia.instances + ic.instances;
  rec.witnesses.push_back({"prediction", predicts ? "deterministic" : "possibly-nondeterministic"});
  for (const CheckRecord* r : {&ca, &cc, &ia, &ic}) rec.witnesses.push_back({r->id, holds(*r)});
  for (const CheckRecord* r : {&ca, &cc, &ia, &ic}) append_prefixed(rec.witnesses, r->id, *r);
  if (predicts) {
    rec.detail = "(+) is associative and commutative on carrier_b: predicts deterministic";
  } else {
    rec.detail = "predicts possibly nondeterministic:";
    if (ca.verdict != Verdict::Pass) rec.detail += " associativity fails on carrier_b;";
    if (cc.verdict != Verdict::Pass) rec.detail += " commutativity fails on carrier_b;";
    rec.detail.pop_back();
  }
  return make_report("predict", std::move(bounds), {std::move(rec)});
}

Report check_theorem_aggregate_det(const OpSpec& ops, std::size_t max_parts, std::size_t max_len,
                                   bool override_guards) {
  check_rdd_guards(ops.carrier_a, max_parts, max_len, override_guards);
  const std::string id = "aggregate-det";
  const std::string anchor = "Theorem aggregate-det";
  Bounds bounds = rdd_bounds(ops, max_parts, max_len);
  if (is_float(ops)) {
    return make_report(id, std::move(bounds), {skipped(id, anchor, "float carrier: no algebraic prediction")});
  }
  const auto bs = enum_values(ops.carrier_b);
  const CheckRecord ga = assoc_record(ops.oplus, bs, "associative");
  const CheckRecord gc = comm_record(ops.oplus, bs, "commutative");
  if (ga.verdict != Verdict::Pass || gc.verdict != Verdict::Pass) {
    return make_report(id, std::move(bounds), {not_met(id, anchor, {{"associative", &ga}, {"commutative", &gc}})});
  }
  RddSpace space(ops.carrier_a, max_parts, max_len);
  auto rec = quantify(id, anchor, {space.size}, [&](const Instance& i) -> Witnesses {
    const Rdd rdd = space.at(i[0]);
    NonDet lhs = aggregate(ops, rdd);
    NonDet rhs = pure(sequential(ops, rdd));
    if (lhs == rhs) return std::nullopt;
    return std::vector<Witness>{{"rdd", to_string(rdd)}, {"aggregate", lhs.to_string()}, {"sequential", rhs.to_string()}};
  });
  rec.instances += ga.instances + gc.instances;
  if (rec.verdict == Verdict::Pass) rec.detail += "; " + at_bounds(max_parts, max_len);
  return make_report(id, std::move(bounds), {std::move(rec)});
}

Report check_corollary_det_hom(const OpSpec& ops, std::size_t max_parts, std::size_t max_len,
                               std::size_t image_bound, bool override_guards) {
  check_rdd_guards(ops.carrier_a, max_parts, max_len, override_guards);
  const std::string id = "aggregate-det-hom";
  const std::string anchor = "Corollary aggregate-det-hom";
  Bounds bounds = rdd_bounds(ops, max_parts, max_len);
  if (is_float(ops)) {
    return make_report(id, std::move(bounds), {skipped(id, anchor, "float carrier: no algebraic prediction")});
  }
  const std::size_t effective = std::max(image_bound, max_parts == 0 ? 0 : (max_parts - 1) * max_len);
  const ImageSet img = image_set(ops.otimes, ops.z, ops.carrier_a, effective);
  bounds.emplace_back("image_bound", std::to_string(effective));
  bounds.emplace_back("image_saturated", img.saturated ? "yes" : "no");

  const auto bs = enum_values(ops.carrier_b);
  const CheckRecord ga = assoc_record(ops.oplus, bs, "associative");
  const CheckRecord gc = comm_record(ops.oplus, bs, "commutative");
  const CheckRecord gi = identity_record(ops.oplus, ops.z, bs, "identity");
  const Report ex = check_exchange(ops.otimes, ops.oplus, ops.z, ops.carrier_a, effective);
  const CheckRecord& ge = ex.records.front();
  if (ga.verdict != Verdict::Pass || gc.verdict != Verdict::Pass || gi.verdict != Verdict::Pass ||
      ge.verdict != Verdict::Pass) {
    return make_report(id, std::move(bounds),
                       {not_met(id, anchor, {{"associative", &ga}, {"commutative", &gc}, {"identity", &gi}, {"exchange", &ge}})});
  }
  RddSpace space(ops.carrier_a, max_parts, max_len);
  auto rec = quantify(id, anchor, {space.size}, [&](const Instance& i) -> Witnesses {
    const Rdd rdd = space.at(i[0]);
    NonDet lhs = aggregate(ops, rdd);
    NonDet rhs = pure(fold_concat(ops, rdd));
    if (lhs == rhs) return std::nullopt;
    return std::vector<Witness>{{"rdd", to_string(rdd)}, {"aggregate", lhs.to_string()}, {"foldr concat", rhs.to_string()}};
  });
  rec.instances += ga.instances + gc.instances + gi.instances + ge.instances;
  if (rec.verdict == Verdict::Pass) rec.detail += "; " + at_bounds(max_parts, max_len);
  return make_report(id, std::move(bounds), {std::move(rec)});
}

Report check_lemma_det_reasoning(const OpSpec& ops, std::size_t max_parts, std::size_t max_len,
                                 bool override_guards) {
  check_rdd_guards(ops.carrier_a, max_parts, max_len, override_guards);
  const std::string id = "det-reasoning";
  const std::string anchor = "Lemma aggregate-det-reasoning";
  Bounds bounds = rdd_bounds(ops, max_parts, max_len);
  RddSpace space(ops.carrier_a, max_parts, max_len);
  const CheckRecord gate = concat_gate(ops, space);
  if (gate.verdict != Verdict::Pass) return make_report(id, std::move(bounds), {not_met(id, anchor, {{"gate", &gate}})});

  auto rec = quantify(id, anchor, {space.size}, [&](const Instance& i) -> Witnesses {
    const Rdd xss = space.at(i[0]);
    const Value target = fold_concat(ops, xss);
    const Value in_order = sequential(ops, xss);
    if (in_order != target) {
      return std::vector<Witness>{{"xss", to_string(xss)}, {"foldr concat", target.to_string()},
                                  {"merge xss", in_order.to_string()}};
    }
    ValList parts;
    for (const auto& p : xss) parts.push_back(Value::list(p));
    const NonDet orders = perm(parts);
    for (const Value& yss : orders.outcomes()) {
      Rdd order;
      for (const auto& p : yss.as_list()) order.push_back(p.as_list());
      const Value merged = sequential(ops, order);
      if (merged != target) {
        return std::vector<Witness>{{"xss", to_string(xss)}, {"yss", to_string(order)},
                                    {"foldr concat", target.to_string()}, {"merge yss", merged.to_string()}};
      }
    }
    return std::nullopt;
  });
  rec.instances += gate.instances;
  if (rec.verdict == Verdict::Pass) rec.detail += "; " + at_bounds(max_parts, max_len);
  return make_report(id, std::move(bounds), {std::move(rec)});
}

Report check_converse_cmonoid(const OpSpec& ops, std::size_t max_parts, std::size_t max_len,
                              std::size_t image_bound, bool override_guards) {
  check_rdd_guards(ops.carrier_a, max_parts, max_len, override_guards);
  const std::string anchor = "Theorem aggregate-cmonoid";
  const std::vector<std::string> ids{"converse-identity", "converse-commutative", "converse-associative"};
  Bounds bounds = rdd_bounds(ops, max_parts, max_len);
  const std::size_t near = std::min(image_bound, max_len);
  const std::size_t far = std::min(image_bound, max_len / 2);
  bounds.emplace_back("image_bound", std::to_string(near));
  bounds.emplace_back("associativity_image_bound", std::to_string(far));
  if (max_parts < 3) {
    std::vector<CheckRecord> recs;
    for (const auto& id : ids) recs.push_back(skipped(id, anchor, "needs max_parts >= 3 to constrain (+) at these bounds"));
    return make_report("converse-cmonoid", std::move(bounds), std::move(recs));
  }
  RddSpace space(ops.carrier_a, max_parts, max_len);
  const CheckRecord gate = concat_gate(ops, space);
  if (gate.verdict != Verdict::Pass) {
    std::vector<CheckRecord> recs;
    for (const auto& id : ids) recs.push_back(not_met(id, anchor, {{"gate", &gate}}));
    return make_report("converse-cmonoid", std::move(bounds), std::move(recs));
  }
  const ImageSet img = image_set(ops.otimes, ops.z, ops.carrier_a, near);
  const ImageSet small = image_set(ops.otimes, ops.z, ops.carrier_a, far);
  bounds.emplace_back("image", image_text(img));
  std::vector<CheckRecord> recs{identity_record(ops.oplus, ops.z, img.values, ids[0]),
                                comm_record(ops.oplus, img.values, ids[1]),
                                assoc_record(ops.oplus, small.values, ids[2])};
  for (auto& r : recs) {
    r.anchor = anchor;
    r.instances += gate.instances;
    if (r.verdict == Verdict::Pass) r.detail += "; " + at_bounds(max_parts, max_len);
  }
  return make_report("converse-cmonoid", std::move(bounds), std::move(recs));
}

Report check_converse_hom(const OpSpec& ops, std::size_t max_parts, std::size_t max_len, bool override_guards) {
  check_rdd_guards(ops.carrier_a, max_parts, max_len, override_guards);
  const std::string id = "converse-hom";
  const std::string anchor = "Theorem aggregate-hom";
  Bounds bounds = rdd_bounds(ops, max_parts, max_len);
  if (max_parts < 2) {
    return make_report(id, std::move(bounds), {skipped(id, anchor, "needs max_parts >= 2 to constrain (+) at these bounds")});
  }
  RddSpace space(ops.carrier_a, max_parts, max_len);
  const CheckRecord gate = concat_gate(ops, space);
  if (gate.verdict != Verdict::Pass) return make_report(id, std::move(bounds), {not_met(id, anchor, {{"gate", &gate}})});
  Report hom = check_hom_properties(fold_candidate(ops.otimes, ops.oplus, ops.z), ops.carrier_a, max_len);
  CheckRecord rec = std::move(hom.records.front());
  rec.id = id;
  rec.anchor = anchor;
  rec.instances += gate.instances;
  if (rec.verdict == Verdict::Pass) rec.detail += "; " + at_bounds(max_parts, max_len);
  return make_report(id, std::move(bounds), {std::move(rec)});
}

Report float_divergence_demo(const Rdd& rdd, const OpExpr& oplus, const OpExpr& otimes, const Value& z) {
  if (rdd.size() > kMaxPartsCap) {
    throw UsageError("the float demo takes at most " + std::to_string(kMaxPartsCap) + " partitions");
  }
  if (!z.is_float()) throw KindError("the float demo needs a float z");
  std::size_t events = 0;
  ValList folds;
  std::vector<Witness> event_witnesses;
  for (const auto& part : rdd) {
    for (const auto& v : part) {
      if (!v.is_float()) throw KindError("the float demo needs float values, got " + v.to_string());
    }
    try {
      folds.push_back(foldr_list(otimes, z, part));
    } catch (const EvalError& e) {
      ++events;
      if (event_witnesses.empty()) event_witnesses.push_back({"first_divergence", e.what()});
    }
  }
  const NonDet orders = perm(folds);
  std::vector<Value> finite;
  for (const Value& ys : orders.outcomes()) {
    try {
      finite.push_back(foldr_list(oplus, z, ys.as_list()));
    } catch (const EvalError& e) {
      ++events;
      if (event_witnesses.empty()) event_witnesses.push_back({"first_divergence", e.what()});
    }
  }
  const NonDet outcomes = NonDet::of(finite);

  CheckRecord rec;
  rec.id = "float-divergence";
  rec.anchor = "floating-point aggregate divergence";
  rec.verdict = Verdict::Pass;
  rec.instances = orders.size();
  std::size_t n_values = 0;
  for (const auto& p : rdd) n_values += p.size();
  rec.witnesses.push_back({"values", std::to_string(n_values)});
  rec.witnesses.push_back({"partitions", std::to_string(rdd.size())});
  rec.witnesses.push_back({"merge_orders", std::to_string(orders.size())});
  rec.witnesses.push_back({"distinct_outcomes", std::to_string(outcomes.size())});
  if (!outcomes.empty()) {
    rec.witnesses.push_back({"min", outcomes.outcomes().front().to_string()});
    rec.witnesses.push_back({"max", outcomes.outcomes().back().to_string()});
  }
  rec.witnesses.push_back({"divergence_events", std::to_string(events)});
  for (auto& w : event_witnesses) rec.witnesses.push_back(std::move(w));
  if (outcomes.size() <= 16) rec.witnesses.push_back({"outcomes", outcomes.to_string()});
  rec.witnesses.push_back({"note", kOutOfScopeNote});
  rec.detail = std::to_string(outcomes.size()) + " distinct outcome(s) across " + std::to_string(orders.size()) +
               " merge order(s); " + kOutOfScopeNote;
  return make_report("demo-float",
                     {{"oplus", print(oplus)}, {"otimes", print(otimes)}, {"z", z.to_string()},
                      {"partitions", std::to_string(rdd.size())}},
                     {std::move(rec)});
}

std::vector<std::string> float_preset_names() { return {"cancellation", "uniform-zeros", "x73"}; }

FloatPreset float_preset(const std::string& name) {
  if (name == "cancellation") {
    return {name, "1.0, 1e16, -1e16 in three singleton partitions",
            {{Value::real(1.0)}, {Value::real(1e16)}, {Value::real(-1e16)}}};
  }
  if (name == "uniform-zeros") {
    return {name, "twelve zeros in four partitions",
            Rdd(4, ValList(3, Value::real(0.0)))};
  }
  if (name == "x73") {
    // Midpoint Riemann sum of x^73 on [-2, 2]. The terms cancel in exact
    // arithmetic but span dozens of orders of magnitude.
    constexpr int kPoints = 48;
    constexpr std::size_t kParts = 6;
    const double h = 4.0 / kPoints;
    Rdd rdd(kParts);
    for (int i = 0; i < kPoints; ++i) {
      const double x = -2.0 + h * (i + 0.5);
      rdd[static_cast<std::size_t>(i) % kParts].push_back(Value::real(std::pow(x, 73) * h));
    }
    return {name, "midpoint Riemann terms of x^73 on [-2, 2], " + std::to_string(kPoints) + " points round-robin into " +
                      std::to_string(kParts) + " partitions",
            std::move(rdd)};
  }
  throw UsageError("unknown preset '" + name + "' (known: cancellation, uniform-zeros, x73)");
}

}  // namespace nda
