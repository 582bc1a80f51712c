// Runs the nine acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "../catalogue.hpp"
#include "nondet_agg/carrier.hpp"
#include "nondet_agg/functions.hpp"
#include "nondet_agg/homlib.hpp"
#include "nondet_agg/laws.hpp"
#include "nondet_agg/permlib.hpp"
#include "nondet_agg/sparkagg.hpp"

using namespace nda;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool passes(const Report& r) {
  return std::all_of(r.records.begin(), r.records.end(), [](const CheckRecord& c) { return c.verdict == Verdict::Pass; });
}

Verdict verdict(const Report& r) { return r.records.at(0).verdict; }

std::string wv(const Report& r, const char* name) {
  const Witness* w = r.records.at(0).witness(name);
  return w ? w->value : "";
}

OpSpec entry(const std::string& name) {
  for (const auto& e : testing::catalogue())
    if (e.name == name) return testing::ops_of(e.text);
  throw std::runtime_error("no catalogue entry " + name);
}

Value fold_ref(const OpExpr& op, const Value& z, const ValList& xs) {
  Value acc = z;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) acc = eval_binop(op, *it, acc);
  return acc;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Outcome monad_laws() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto arrows = default_arrow_table();
  const Report r = check_monad_laws(CarrierSpec::mod(5), arrows, 3);
  const double secs = seconds_since(start);
  std::size_t passed = 0;
  for (const auto& rec : r.records) {
    if (rec.verdict == Verdict::Pass) ++passed;
    else o.require(false, rec.id + " " + to_string(rec.verdict));
  }
  o.require(r.records.size() == 22, "expected 22 laws, got " + std::to_string(r.records.size()));
  o.require(arrows.size() >= 3, "fewer than 3 arrows");
  o.require(secs < 30, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = std::to_string(passed) + "/22 laws over mod 5, subsets <= 3, " + std::to_string(arrows.size()) +
                         " arrows, " + std::to_string(secs).substr(0, 4) + " s";
  return o;
}

Outcome perm_oracle() {
  Outcome o;
  auto m3 = [](std::int64_t r) { return Value::mod(r, 3); };
  std::vector<Value> six;
  for (const ValList& p : std::vector<ValList>{{m3(0), m3(1), m3(2)}, {m3(1), m3(0), m3(2)}, {m3(1), m3(2), m3(0)},
                                               {m3(0), m3(2), m3(1)}, {m3(2), m3(0), m3(1)}, {m3(2), m3(1), m3(0)}})
    six.push_back(Value::list(p));
  o.require(perm({m3(0), m3(1), m3(2)}) == NonDet::of(six), "perm [0,1,2] is not the six permutations");
  std::size_t lists = 0;
  for (auto xs : enum_lists(CarrierSpec::mod(3), 6)) {
    const NonDet got = perm(xs);
    std::sort(xs.begin(), xs.end());
    std::vector<Value> expected;
    do expected.push_back(Value::list(xs));
    while (std::next_permutation(xs.begin(), xs.end()));
    std::size_t count = factorial(xs.size());
    for (std::int64_t v = 0; v < 3; ++v) count /= factorial(static_cast<std::size_t>(std::count(xs.begin(), xs.end(), m3(v))));
    if (got != NonDet::of(expected) || got.size() != count) {
      o.require(false, "mismatch at " + to_string(xs));
      break;
    }
    ++lists;
  }
  if (o.pass) o.detail = "perm [0,1,2] = 6 permutations; " + std::to_string(lists) +
                         " lists (|xs| <= 6, mod 3) match next_permutation and n!/prod(m_i!)";
  return o;
}

Outcome lemma_suite() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const PureFn g = pure_fn("succ");
  const Predicate p = predicate("is-even");
  for (const char* name : {"(+,+,0) mod 7", "(max,max,0) int 0..3"}) {
    const OpSpec ops = entry(name);
    const FoldSpec f{ops.oplus, ops.z};
    const auto& c = ops.carrier_b;
    const std::vector<Report> reports{check_lemma_fold_perm(f, c, c, 4),  check_lemma_fold_insert(f, c, c, 4),
                                      check_lemma_perm_map(g, c, 4),      check_lemma_insert_map(g, c, 4),
                                      check_lemma_perm_filter(p, c, 4),   check_lemma_perm_id(c, 4)};
    for (const auto& r : reports) o.require(passes(r), r.records.at(0).id + " fails for " + name);
  }
  const OpSpec left = entry("(+,left,0) mod 2");
  const FoldSpec lf{left.oplus, left.z};
  const auto& lc = left.carrier_b;
  const bool l1 = verdict(check_lemma_fold_perm(lf, lc, lc, 4)) == Verdict::Fail;
  const bool l2 = verdict(check_lemma_fold_insert(lf, lc, lc, 4)) == Verdict::Fail;
  const bool ex = verdict(check_exchange_odot(lf, lc, lc)) == Verdict::Fail;
  o.require(l1 && l2 && ex, "left projection: fold-perm/fold-insert/exchange should all fail");
  const double secs = seconds_since(start);
  o.require(secs < 60, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "fold-perm, fold-insert, shuffle-map, insert-map, perm-filter and perm-id pass for + mod 7 and "
                         "max on 0..3 at max_len 4; left projection fails fold-perm, fold-insert and the exchange "
                         "condition; " + std::to_string(secs).substr(0, 4) + " s";
  return o;
}

Outcome hom_biconditionals() {
  Outcome o;
  std::size_t specs = 0, a_holds = 0, p_holds = 0, gated = 0;
  for (const auto& e : testing::catalogue()) {
    const OpSpec ops = testing::ops_of(e.text);
    const std::size_t len = ops.carrier_a.size() > 4 ? 1 : 2;
    const Report hc = check_lemma_hom_concat(fold_candidate(ops.otimes, ops.oplus, ops.z), ops.carrier_a, 3, len);
    o.require(verdict(hc) == Verdict::Pass && wv(hc, "A") == wv(hc, "B"),
              e.name + ": hom-concat A=" + wv(hc, "A") + " B=" + wv(hc, "B"));
    if (wv(hc, "A") == "holds") ++a_holds;
    const Report fh = check_lemma_foldr_hom(ops.otimes, ops.oplus, ops.z, ops.carrier_a, 2);
    if (verdict(fh) != Verdict::HypothesisNotMet) {
      ++gated;
      o.require(verdict(fh) == Verdict::Pass && wv(fh, "P") == wv(fh, "Q"),
                e.name + ": foldr-hom P=" + wv(fh, "P") + " Q=" + wv(fh, "Q"));
      if (wv(fh, "P") == "holds") ++p_holds;
    }
    ++specs;
  }
  for (const char* required : {"(+,+,0) mod 5", "(max,max,0) int 0..3", "(+,max,0) int 0..3", "(-,+,0) mod 5"})
    entry(required);
  o.require(specs >= 6, "catalogue too small");
  if (o.pass)
    o.detail = std::to_string(specs) + " specs: A/B agree everywhere (" + std::to_string(a_holds) + " hold); P/Q agree on " +
               std::to_string(gated) + " gated specs (" + std::to_string(p_holds) + " hold)";
  return o;
}

Outcome theorem_det() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const OpSpec ops = entry("(+,+,0) mod 5");
  std::size_t rdds = 0;
  for (const auto& rdd : enumerate_rdds(ops.carrier_a, 3, 2)) {
    ValList folds;
    for (const auto& part : rdd) folds.push_back(fold_ref(ops.otimes, ops.z, part));
    if (aggregate(ops, rdd) != NonDet::of({fold_ref(ops.oplus, ops.z, folds)})) {
      o.require(false, "aggregate differs from the sequential result at " + to_string(rdd));
      break;
    }
    ++rdds;
  }
  const DeterminismVerdict v = check_determinism(ops, 3, 2);
  o.require(v.deterministic, "check_determinism reports nondeterministic");
  o.require(passes(check_theorem_aggregate_det(ops, 3, 2)), "aggregate-det record does not pass");
  const double secs = seconds_since(start);
  o.require(secs < 60, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = std::to_string(rdds) + " RDDs (parts <= 3, len <= 2) all singleton and sequential; " +
                         std::to_string(secs).substr(0, 4) + " s";
  return o;
}

Outcome nondet_detection() {
  Outcome o;
  const OpSpec ops = entry("(+,left,0) mod 2");
  const DeterminismVerdict v = check_determinism(ops, 2, 1);
  o.require(!v.deterministic && v.counterexample.has_value(), "no counterexample found");
  if (v.counterexample) {
    const Rdd& rdd = v.counterexample->first;
    bool small = rdd.size() <= 2;
    for (const auto& part : rdd) small = small && part.size() <= 1;
    o.require(small, "counterexample too large: " + to_string(rdd));
  }
  const Report pred = predict_determinism(ops, 2);
  const Witness* x = pred.records.at(0).witness("carrier.commutative.x");
  const Witness* y = pred.records.at(0).witness("carrier.commutative.y");
  o.require(wv(pred, "carrier.commutative") == "fails" && x && y, "prediction lacks a commutativity counterexample");
  if (o.pass)
    o.detail = "counterexample RDD " + to_string(v.counterexample->first) + " with outcomes " +
               v.counterexample->second.to_string() + "; commutativity fails at (" + x->value + "," + y->value + ")";
  return o;
}

Outcome converse() {
  Outcome o;
  std::size_t gated = 0, violations = 0;
  for (const auto& e : testing::catalogue()) {
    const OpSpec ops = testing::ops_of(e.text);
    bool gate = true;
    for (const auto& rdd : enumerate_rdds(ops.carrier_a, 3, 2)) {
      ValList all;
      for (const auto& part : rdd) all.insert(all.end(), part.begin(), part.end());
      if (aggregate(ops, rdd) != NonDet::of({fold_ref(ops.otimes, ops.z, all)})) {
        gate = false;
        break;
      }
    }
    if (!gate) continue;
    ++gated;
    const Report cm = check_converse_cmonoid(ops, 3, 2, 3);
    const Report ch = check_converse_hom(ops, 3, 2);
    if (!passes(cm) || !passes(ch)) {
      ++violations;
      o.require(false, e.name + " violates a converse conclusion");
    }
  }
  o.require(gated > 0, "no catalogue spec meets the gate");
  if (o.pass)
    o.detail = std::to_string(gated) + " gated specs, " + std::to_string(violations) +
               " violations (parts <= 3, len <= 2)";
  return o;
}

Outcome float_demo() {
  Outcome o;
  const OpExpr add = parse_expr("x + y");
  const Report cancel = float_divergence_demo(float_preset("cancellation").rdd, add, add, Value::real(0.0));
  const Report x73 = float_divergence_demo(float_preset("x73").rdd, add, add, Value::real(0.0));
  const std::size_t c = std::stoul(wv(cancel, "distinct_outcomes"));
  const std::size_t x = std::stoul(wv(x73, "distinct_outcomes"));
  o.require(wv(cancel, "merge_orders") == "6", "cancellation should have 6 merge orders");
  o.require(c >= 2, "cancellation: " + std::to_string(c) + " outcomes");
  o.require(x > 1, "x73: " + std::to_string(x) + " outcomes");
  const std::string note = wv(x73, "note");
  o.require(note.find("-8192.0..12288.0") != std::string::npos && note.find("out of scope") != std::string::npos,
            "report does not flag the cluster-scale range as out of scope");
  if (o.pass)
    o.detail = "cancellation " + std::to_string(c) + " outcomes " + wv(cancel, "outcomes") + "; x73 " + std::to_string(x) +
               " outcomes in [" + wv(x73, "min") + ", " + wv(x73, "max") + "] over " + wv(x73, "merge_orders") +
               " orders; cluster-scale range flagged out of scope";
  return o;
}

std::string capture(const std::string& cmd, int& status) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

Outcome tool_determinism() {
  Outcome o;
  const std::string ops = std::string(NDA_OPS_DIR) + "/";
  const std::vector<std::string> commands{
      "laws --carrier \"mod 5\" --json",
      "lemmas --ops " + ops + "add_max_int03.ops --max-len 3 --json",
      "check --ops " + ops + "add_mod5.ops --json",
      "check --ops " + ops + "leftproj_mod2.ops --json",
      "converse --ops " + ops + "max_int03.ops --json",
      "demo-float --preset x73 --json",
  };
  for (const auto& args : commands) {
    int s1 = 0, s4 = 0;
    const std::string one = capture("NONDET_AGG_THREADS=1 " + std::string(NDA_CLI_PATH) + " " + args, s1);
    const std::string four = capture("NONDET_AGG_THREADS=4 " + std::string(NDA_CLI_PATH) + " " + args, s4);
    o.require(!one.empty() && one == four && s1 == s4, "output differs for: " + args);
  }
  if (o.pass) o.detail = std::to_string(commands.size()) + " commands byte-identical under 1 and 4 workers";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"monad-law suite", monad_laws},
      {"perm oracle", perm_oracle},
      {"lemma suite", lemma_suite},
      {"homomorphism biconditionals", hom_biconditionals},
      {"aggregate determinism theorem", theorem_det},
      {"nondeterminism detection", nondet_detection},
      {"converse theorems", converse},
      {"float divergence demo", float_demo},
      {"tool determinism", tool_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail << std::endl;
  }
  return failed;
}
