#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "nondet_agg/error.hpp"
#include "nondet_agg/functions.hpp"
#include "nondet_agg/homlib.hpp"
#include "nondet_agg/laws.hpp"
#include "nondet_agg/opspec.hpp"
#include "nondet_agg/parallel.hpp"
#include "nondet_agg/permlib.hpp"
#include "nondet_agg/sparkagg.hpp"

namespace nda::cli {

namespace {

using Bounds = std::vector<std::pair<std::string, std::string>>;

struct Options {
  std::string ops_path;
  std::string carrier = "mod 5";
  std::size_t max_parts = 3;
  std::size_t max_len = 2;
  std::size_t image_bound = 3;
  std::size_t set_bound = kDefaultSetBound;
  bool json = false;
  bool override_guards = false;
  std::string preset;
  std::string values;
  std::size_t partitions = 0;
};

// Sub-reports produced by one library call, with the wall time it took.
struct Group {
  Report report;
  double ms = 0;
};

template <class F>
Group timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  Report r = f();
  const auto stop = std::chrono::steady_clock::now();
  return {std::move(r), std::chrono::duration<double, std::milli>(stop - start).count()};
}

std::string echo(const std::vector<std::string>& args) {
  std::string s = "nondet-agg";
  for (const auto& a : args) {
    s += ' ';
    if (a.find_first_of(" \t\"") != std::string::npos || a.empty()) {
      s += '"';
      for (char c : a) {
        if (c == '"' || c == '\\') s += '\\';
        s += c;
      }
      s += '"';
    } else {
      s += a;
    }
  }
  return s;
}

OpSpec load_ops(const std::string& path) {
  if (path.empty()) throw UsageError("--ops FILE is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read ops file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_opspec(text.str());
  } catch (const ParseError& e) {
    throw Error(path + ": parse error at " + e.what());
  }
}

Bounds ops_bounds(const OpSpec& ops) {
  return {{"oplus", print(ops.oplus)},
          {"otimes", print(ops.otimes)},
          {"z", ops.z.to_string()},
          {"carrier_a", ops.carrier_a.to_string()},
          {"carrier_b", ops.carrier_b.to_string()}};
}

// Collects the records of every group into one report. Sub-report bounds
// not already stated at the top level are kept, prefixed by the sub-report.
Report combine(std::string command, Bounds bounds, const std::vector<Group>& groups, std::vector<double>& elapsed) {
  Report out;
  out.command = std::move(command);
  out.bounds = std::move(bounds);
  for (const auto& g : groups) {
    for (const auto& b : g.report.bounds) {
      bool known = false;
      for (const auto& have : out.bounds) known = known || have == b;
      if (!known) out.bounds.emplace_back(g.report.command + "." + b.first, b.second);
    }
    for (const auto& r : g.report.records) {
      out.records.push_back(r);
      elapsed.push_back(g.ms / static_cast<double>(g.report.records.size()));
    }
  }
  out.exit_status = exit_status_for(out.records);
  return out;
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError("empty entry in --values");
    item = item.substr(first, last - first + 1);
    double v = 0;
    const char* b = item.data();
    const char* e = b + item.size();
    if (*b == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || ptr != e || !std::isfinite(v)) throw UsageError("bad float '" + item + "' in --values");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

Report cmd_laws(const Options& o, const std::string& command, std::vector<double>& elapsed) {
  const CarrierSpec carrier = CarrierSpec::parse(o.carrier);
  Group g = timed([&] { return check_monad_laws(carrier, default_arrow_table(), o.set_bound); });
  Bounds bounds = g.report.bounds;
  return combine(command, std::move(bounds), {g}, elapsed);
}

Report cmd_lemmas(const Options& o, const std::string& command, std::vector<double>& elapsed) {
  const OpSpec ops = load_ops(o.ops_path);
  check_max_len(o.max_len);
  const FoldSpec fold{ops.oplus, ops.z};
  const PureFn g = pure_fn("succ");
  const Predicate p = predicate("is-even");
  std::vector<Group> groups;

  Group exchange = timed([&] { return check_exchange_odot(fold, ops.carrier_b, ops.carrier_b); });
  Group fold_perm = timed([&] { return check_lemma_fold_perm(fold, ops.carrier_b, ops.carrier_b, o.max_len); });
  {
    CheckRecord& r = fold_perm.report.records.front();
    const CheckRecord& ex = exchange.report.records.front();
    r.witnesses.insert(r.witnesses.begin(), {"exchange", ex.verdict == Verdict::Pass ? "holds" : "fails"});
    for (const auto& w : ex.witnesses) r.witnesses.push_back({"exchange." + w.name, w.value});
    r.instances += ex.instances;
    fold_perm.ms += exchange.ms;
  }
  groups.push_back(std::move(fold_perm));
  groups.push_back(timed([&] { return check_lemma_fold_insert(fold, ops.carrier_b, ops.carrier_b, o.max_len); }));
  groups.push_back(timed([&] { return check_lemma_perm_map(g, ops.carrier_a, o.max_len); }));
  groups.push_back(timed([&] { return check_lemma_insert_map(g, ops.carrier_a, o.max_len); }));
  groups.push_back(timed([&] { return check_lemma_perm_filter(p, ops.carrier_a, o.max_len); }));
  groups.push_back(timed([&] { return check_lemma_perm_id(ops.carrier_a, o.max_len); }));
  groups.push_back(timed([&] {
    return check_lemma_hom_concat(fold_candidate(ops.otimes, ops.oplus, ops.z), ops.carrier_a, o.max_parts,
                                  o.image_bound);
  }));
  groups.push_back(
      timed([&] { return check_lemma_foldr_hom(ops.otimes, ops.oplus, ops.z, ops.carrier_a, o.image_bound); }));

  Bounds bounds = ops_bounds(ops);
  bounds.emplace_back("max_len", std::to_string(o.max_len));
  bounds.emplace_back("max_parts", std::to_string(o.max_parts));
  bounds.emplace_back("image_bound", std::to_string(o.image_bound));
  bounds.emplace_back("fold_operator", "oplus over carrier_b");
  bounds.emplace_back("map_function", g.name);
  bounds.emplace_back("filter_predicate", p.name);
  return combine(command, std::move(bounds), groups, elapsed);
}

Bounds rdd_flag_bounds(const OpSpec& ops, const Options& o) {
  Bounds bounds = ops_bounds(ops);
  bounds.emplace_back("max_parts", std::to_string(o.max_parts));
  bounds.emplace_back("max_len", std::to_string(o.max_len));
  bounds.emplace_back("image_bound", std::to_string(o.image_bound));
  return bounds;
}

Report cmd_check(const Options& o, const std::string& command, std::vector<double>& elapsed) {
  const OpSpec ops = load_ops(o.ops_path);
  check_rdd_guards(ops.carrier_a, o.max_parts, o.max_len, o.override_guards);
  std::vector<Group> groups;
  bool deterministic = true;
  groups.push_back(timed([&] {
    DeterminismVerdict v = check_determinism(ops, o.max_parts, o.max_len, o.override_guards);
    deterministic = v.deterministic;
    Report r;
    r.command = "determinism";
    r.records.push_back(v.to_record());
    return r;
  }));
  groups.push_back(timed([&] { return predict_determinism(ops, o.image_bound); }));
  groups.push_back(timed([&] { return check_theorem_aggregate_det(ops, o.max_parts, o.max_len, o.override_guards); }));
  groups.push_back(timed(
      [&] { return check_corollary_det_hom(ops, o.max_parts, o.max_len, o.image_bound, o.override_guards); }));
  Report r = combine(command, rdd_flag_bounds(ops, o), groups, elapsed);
  r.exit_status = deterministic ? 0 : 1;
  return r;
}

Report cmd_converse(const Options& o, const std::string& command, std::vector<double>& elapsed) {
  const OpSpec ops = load_ops(o.ops_path);
  check_rdd_guards(ops.carrier_a, o.max_parts, o.max_len, o.override_guards);
  std::vector<Group> groups;
  groups.push_back(timed([&] { return check_lemma_det_reasoning(ops, o.max_parts, o.max_len, o.override_guards); }));
  groups.push_back(timed(
      [&] { return check_converse_cmonoid(ops, o.max_parts, o.max_len, o.image_bound, o.override_guards); }));
  groups.push_back(timed([&] { return check_converse_hom(ops, o.max_parts, o.max_len, o.override_guards); }));
  return combine(command, rdd_flag_bounds(ops, o), groups, elapsed);
}

Report cmd_demo_float(const Options& o, const std::string& command, std::vector<double>& elapsed) {
  Rdd rdd;
  std::string source;
  if (!o.values.empty()) {
    if (!o.preset.empty()) throw UsageError("give either --preset or --values, not both");
    const auto vs = parse_values(o.values);
    std::size_t parts = o.partitions == 0 ? std::min(vs.size(), kMaxPartsCap) : o.partitions;
    if (parts > kMaxPartsCap) throw UsageError("--partitions may be at most " + std::to_string(kMaxPartsCap));
    if (parts == 0) throw UsageError("--values is empty");
    rdd.assign(parts, {});
    for (std::size_t i = 0; i < vs.size(); ++i) rdd[i % parts].push_back(Value::real(vs[i]));
    source = "values";
  } else {
    if (o.partitions != 0) throw UsageError("--partitions applies only to --values");
    const FloatPreset preset = float_preset(o.preset.empty() ? "cancellation" : o.preset);
    rdd = preset.rdd;
    source = "preset " + preset.name + ": " + preset.description;
  }
  const OpExpr add = parse_expr("x + y");
  Group g = timed([&] { return float_divergence_demo(rdd, add, add, Value::real(0.0)); });
  Report r = combine(command, {{"source", source}}, {g}, elapsed);
  r.exit_status = 0;
  return r;
}

void add_ops_option(CLI::App* sub, Options& o) {
  sub->add_option("--ops", o.ops_path, "operator-spec file (oplus, otimes, z, carriers)")->required();
}

void add_json_flag(CLI::App* sub, Options& o) { sub->add_flag("--json", o.json, "canonical JSON report on stdout"); }

std::string summary(const Report& r) {
  const CheckRecord* det = r.find("determinism");
  const CheckRecord* pred = r.find("predict-determinism");
  const CheckRecord* thm = r.find("aggregate-det");
  if (!det) return "";
  std::string s;
  if (det->verdict == Verdict::Pass) {
    s = "deterministic at bounds";
    if (thm && thm->verdict == Verdict::Pass) s += "; Theorem aggregate-det verified";
  } else {
    s = "NONDETERMINISTIC; minimal counterexample RDD=" + det->witness("rdd")->value;
    if (pred) {
      if (const Witness* x = pred->witness("carrier.commutative.x")) {
        s += "; commutativity fails at (x,y)=(" + x->value + "," + pred->witness("carrier.commutative.y")->value + ")";
      }
      if (const Witness* x = pred->witness("carrier.associative.x")) {
        s += "; associativity fails at (x,y,w)=(" + x->value + "," + pred->witness("carrier.associative.y")->value +
             "," + pred->witness("carrier.associative.w")->value + ")";
      }
    }
  }
  return s + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Equational checks for non-deterministic aggregation", "nondet-agg"};
  app.require_subcommand(1);

  auto* laws = app.add_subcommand("laws", "monad and choice law catalogue over a carrier");
  laws->add_option("--carrier", o.carrier, "carrier, e.g. \"mod 5\" or \"int 0..3\"")->capture_default_str();
  laws->add_option("--set-bound", o.set_bound, "largest outcome set quantified over")->capture_default_str();
  add_json_flag(laws, o);

  auto* lemmas = app.add_subcommand("lemmas", "permutation and homomorphism lemmas for an operator spec");
  add_ops_option(lemmas, o);
  lemmas->add_option("--max-len", o.max_len, "longest list for the permutation lemmas (cap 7) [4]");
  lemmas->add_option("--max-parts", o.max_parts, "most partitions for Lemma hom-concat [2]");
  lemmas->add_option("--image-bound", o.image_bound, "longest list for the homomorphism lemmas [3]");
  add_json_flag(lemmas, o);

  auto* check = app.add_subcommand("check", "determinism of aggregate by enumeration and by prediction");
  add_ops_option(check, o);
  check->add_option("--max-parts", o.max_parts, "most partitions per RDD (cap 6) [3]");
  check->add_option("--max-len", o.max_len, "longest partition [2]");
  check->add_option("--image-bound", o.image_bound, "longest list generating the fold image [3]");
  check->add_flag("--override-guards", o.override_guards, "lift the partition and RDD-count caps");
  add_json_flag(check, o);

  auto* converse = app.add_subcommand("converse", "algebraic consequences of deterministic aggregation");
  add_ops_option(converse, o);
  converse->add_option("--max-parts", o.max_parts, "most partitions per RDD (cap 6) [3]");
  converse->add_option("--max-len", o.max_len, "longest partition [2]");
  converse->add_option("--image-bound", o.image_bound, "longest list generating the fold image [3]");
  converse->add_flag("--override-guards", o.override_guards, "lift the partition and RDD-count caps");
  add_json_flag(converse, o);

  auto* demo = app.add_subcommand("demo-float", "merge-order divergence of floating-point sums");
  demo->add_option("--preset", o.preset, "cancellation | uniform-zeros | x73 [cancellation]");
  demo->add_option("--values", o.values, "comma-separated floats instead of a preset");
  demo->add_option("--partitions", o.partitions, "split --values round-robin into N partitions (<= 6)");
  add_json_flag(demo, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (lemmas->parsed()) {
    if (lemmas->count("--max-len") == 0) o.max_len = kDefaultMaxLen;
    if (lemmas->count("--max-parts") == 0) o.max_parts = 2;
  }

  try {
    worker_count();
    const std::string command = echo(args);
    std::vector<double> elapsed;
    Report report;
    if (laws->parsed()) {
      report = cmd_laws(o, command, elapsed);
    } else if (lemmas->parsed()) {
      report = cmd_lemmas(o, command, elapsed);
    } else if (check->parsed()) {
      report = cmd_check(o, command, elapsed);
    } else if (converse->parsed()) {
      report = cmd_converse(o, command, elapsed);
    } else {
      report = cmd_demo_float(o, command, elapsed);
    }
    if (o.json) {
      out << to_json(report);
    } else {
      out << to_text(report, elapsed) << summary(report);
    }
    return report.exit_status;
  } catch (const ParseError& e) {
    err << "nondet-agg: parse error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "nondet-agg: usage error: " << e.what() << "\n";
  } catch (const KindError& e) {
    err << "nondet-agg: kind error: " << e.what() << "\n";
  } catch (const EvalError& e) {
    err << "nondet-agg: evaluation aborted: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "nondet-agg: error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace nda::cli
