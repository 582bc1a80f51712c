#include "nondet_agg/homlib.hpp"

#include <algorithm>
#include <set>

#include "nondet_agg/error.hpp"
#include "nondet_agg/permlib.hpp"
#include "nondet_agg/quantify.hpp"

namespace nda {

namespace {

using Witnesses = std::optional<std::vector<Witness>>;

Report single(std::string command, std::vector<std::pair<std::string, std::string>> bounds,
              CheckRecord rec) {
  Report r;
  r.command = std::move(command);
  r.bounds = std::move(bounds);
  r.records.push_back(std::move(rec));
  r.exit_status = exit_status_for(r.records);
  return r;
}

std::string holds(const CheckRecord& r) { return r.verdict == Verdict::Pass ? "holds" : "fails"; }

void append_prefixed(std::vector<Witness>& out, const std::string& prefix, const CheckRecord& r) {
  for (const auto& w : r.witnesses) out.push_back({prefix + "." + w.name, w.value});
}

// Passes when both sides agree; the witnesses carry each side's verdict and
// counterexample.
CheckRecord biconditional(std::string id, std::string anchor, const std::string& left_name,
                          const CheckRecord& left, const std::string& right_name, const CheckRecord& right) {
  CheckRecord rec;
  rec.id = std::move(id);
  rec.anchor = std::move(anchor);
  rec.instances = left.instances + right.instances;
  rec.witnesses.push_back({left_name, holds(left)});
  rec.witnesses.push_back({right_name, holds(right)});
  append_prefixed(rec.witnesses, left_name, left);
  append_prefixed(rec.witnesses, right_name, right);
  const bool agree = (left.verdict == Verdict::Pass) == (right.verdict == Verdict::Pass);
  rec.verdict = agree ? Verdict::Pass : Verdict::Fail;
  rec.detail = left_name + " " + holds(left) + ", " + right_name + " " + holds(right) +
               (agree ? "; the two sides agree" : "; the two sides DISAGREE");
  return rec;
}

// h [] = z, then h [x] = k x over ca, then the concatenation case over
// xs_lists × ys_lists, checked in that order.
CheckRecord hom_record(std::string id, std::string anchor, const HomCandidate& c, const CarrierSpec& ca,
                       std::size_t xs_len, std::size_t ys_len, bool k_from_h) {
  const auto as = enum_values(ca);
  const auto xs_lists = enum_lists(ca, xs_len);
  const auto ys_lists = enum_lists(ca, ys_len);
  std::vector<Value> h_xs(xs_lists.size());
  for (std::size_t i = 0; i < xs_lists.size(); ++i) h_xs[i] = c.h(xs_lists[i]);
  std::vector<Value> h_ys(ys_lists.size());
  for (std::size_t i = 0; i < ys_lists.size(); ++i) h_ys[i] = c.h(ys_lists[i]);

  const std::size_t n_single = as.size();
  const std::size_t n_concat = domain_size({xs_lists.size(), ys_lists.size()});
  return quantify(std::move(id), std::move(anchor), {1 + n_single + n_concat}, [&](const Instance& inst) -> Witnesses {
    std::size_t i = inst[0];
    if (i == 0) {
      Value h0 = c.h({});
      if (h0 == c.z) return std::nullopt;
      return std::vector<Witness>{{"equation", "h [] = z"}, {"h []", h0.to_string()}, {"z", c.z.to_string()}};
    }
    if (i <= n_single) {
      const Value& x = as[i - 1];
      Value lhs = c.h({x});
      Value rhs = (k_from_h || !c.otimes) ? lhs : eval_binop(*c.otimes, x, c.z);
      if (lhs == rhs) return std::nullopt;
      return std::vector<Witness>{
          {"equation", "h [x] = k x"}, {"x", x.to_string()}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
    }
    const std::size_t flat = i - 1 - n_single;
    const std::size_t xi = flat / ys_lists.size();
    const std::size_t yi = flat % ys_lists.size();
    ValList both = xs_lists[xi];
    both.insert(both.end(), ys_lists[yi].begin(), ys_lists[yi].end());
    Value lhs = c.h(both);
    Value rhs = eval_binop(c.oplus, h_xs[xi], h_ys[yi]);
    if (lhs == rhs) return std::nullopt;
    return std::vector<Witness>{{"equation", "h (xs ++ ys) = h xs (+) h ys"},
                                {"xs", to_string(xs_lists[xi])},
                                {"ys", to_string(ys_lists[yi])},
                                {"lhs", lhs.to_string()},
                                {"rhs", rhs.to_string()}};
  });
}

CheckRecord exchange_record(const OpExpr& otimes, const OpExpr& oplus, const CarrierSpec& ca, const ImageSet& img) {
  const auto as = enum_values(ca);
  const auto& is = img.values;
  return quantify("exchange", "exchange law of Lemma foldr-hom", {as.size(), is.size(), is.size()},
                  [&](const Instance& i) -> Witnesses {
                    const Value& x = as[i[0]];
                    const Value& y = is[i[1]];
                    const Value& w = is[i[2]];
                    Value lhs = eval_binop(otimes, x, eval_binop(oplus, y, w));
                    Value rhs = eval_binop(oplus, eval_binop(otimes, x, y), w);
                    if (lhs == rhs) return std::nullopt;
                    return std::vector<Witness>{{"x", x.to_string()},
                                                {"y", y.to_string()},
                                                {"w", w.to_string()},
                                                {"lhs", lhs.to_string()},
                                                {"rhs", rhs.to_string()}};
                  });
}

std::string image_text(const ImageSet& img) {
  std::string s = "{";
  for (std::size_t i = 0; i < img.values.size(); ++i) {
    if (i) s += ",";
    s += img.values[i].to_string();
  }
  return s + "}";
}

}  // namespace

bool ImageSet::contains(const Value& v) const { return std::binary_search(values.begin(), values.end(), v); }

ImageSet image_set(const OpExpr& otimes, const Value& z, const CarrierSpec& ca, std::size_t max_len) {
  const auto as = enum_values(ca);
  std::set<Value> level{z};
  std::vector<Value> frontier{z};
  ImageSet img;
  img.max_len = max_len;
  for (std::size_t k = 0; k <= max_len; ++k) {
    std::vector<Value> next;
    for (const auto& s : frontier) {
      for (const auto& x : as) {
        Value v = eval_binop(otimes, x, s);
        if (level.insert(v).second) next.push_back(std::move(v));
      }
    }
    if (k == max_len) {
      img.saturated = next.empty();
      for (const auto& v : next) level.erase(v);
      break;
    }
    if (next.empty()) {
      img.saturated = true;
      break;
    }
    frontier = std::move(next);
  }
  img.values.assign(level.begin(), level.end());
  return img;
}

HomCandidate fold_candidate(const OpExpr& otimes, const OpExpr& oplus, const Value& z) {
  return HomCandidate{"foldr(" + print(otimes) + ", " + z.to_string() + ")",
                      [otimes, z](const ValList& xs) { return foldr_list(otimes, z, xs); }, oplus, z, otimes};
}

Report check_hom_properties(const HomCandidate& c, const CarrierSpec& ca, std::size_t max_len) {
  auto rec = hom_record("hom-properties", "list homomorphism equations", c, ca, max_len, max_len, false);
  return single("hom-properties",
                {{"h", c.name}, {"oplus", print(c.oplus)}, {"carrier_a", ca.to_string()}, {"max_len", std::to_string(max_len)}},
                std::move(rec));
}

Report check_lemma_hom_concat(const HomCandidate& c, const CarrierSpec& ca, std::size_t max_parts,
                              std::size_t max_len) {
  if (max_parts == 0) throw UsageError("max_parts must be at least 1 for Lemma hom-concat");
  const auto parts = enum_lists(ca, max_len);
  std::vector<Value> h_parts(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) h_parts[i] = c.h(parts[i]);
  const std::size_t n = count_sequences(parts.size(), max_parts);

  CheckRecord a = quantify("A", "", {domain_size({n})}, [&](const Instance& inst) -> Witnesses {
    const auto seq = decode_sequence(inst[0], parts.size(), max_parts);
    Value lhs = c.z;
    for (std::size_t k = seq.size(); k-- > 0;) lhs = eval_binop(c.oplus, h_parts[seq[k]], lhs);
    std::vector<ValList> xss;
    for (std::size_t idx : seq) xss.push_back(parts[idx]);
    Value rhs = c.h(concat(xss));
    if (lhs == rhs) return std::nullopt;
    std::string text = "[";
    for (std::size_t k = 0; k < xss.size(); ++k) text += (k ? "," : "") + to_string(xss[k]);
    return std::vector<Witness>{{"xss", text + "]"}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
  });
  CheckRecord b = hom_record("B", "", c, ca, max_len, (max_parts - 1) * max_len, true);

  auto rec = biconditional("hom-concat", "Lemma hom-concat", "A", a, "B", b);
  return single("hom-concat",
                {{"h", c.name},
                 {"oplus", print(c.oplus)},
                 {"carrier_a", ca.to_string()},
                 {"max_parts", std::to_string(max_parts)},
                 {"max_len", std::to_string(max_len)}},
                std::move(rec));
}

Report check_exchange(const OpExpr& otimes, const OpExpr& oplus, const Value& z, const CarrierSpec& ca,
                      std::size_t image_bound) {
  const ImageSet img = image_set(otimes, z, ca, image_bound);
  auto rec = exchange_record(otimes, oplus, ca, img);
  return single("exchange",
                {{"otimes", print(otimes)},
                 {"oplus", print(oplus)},
                 {"carrier_a", ca.to_string()},
                 {"image_bound", std::to_string(image_bound)},
                 {"image", image_text(img)},
                 {"image_saturated", img.saturated ? "yes" : "no"}},
                std::move(rec));
}

Report check_lemma_foldr_hom(const OpExpr& otimes, const OpExpr& oplus, const Value& z, const CarrierSpec& ca,
                             std::size_t max_len) {
  const ImageSet img = image_set(otimes, z, ca, max_len);
  const auto& is = img.values;
  std::vector<std::pair<std::string, std::string>> bounds{{"otimes", print(otimes)},
                                                          {"oplus", print(oplus)},
                                                          {"z", z.to_string()},
                                                          {"carrier_a", ca.to_string()},
                                                          {"max_len", std::to_string(max_len)},
                                                          {"image", image_text(img)},
                                                          {"image_saturated", img.saturated ? "yes" : "no"}};

  CheckRecord gate = quantify("gate", "", {is.size(), is.size(), is.size()}, [&](const Instance& i) -> Witnesses {
    const Value& x = is[i[0]];
    const Value& y = is[i[1]];
    const Value& w = is[i[2]];
    if (i[1] == 0 && i[2] == 0) {
      Value zl = eval_binop(oplus, z, x);
      Value zr = eval_binop(oplus, x, z);
      if (zl != x || zr != x) {
        return std::vector<Witness>{{"property", "z is an identity of (+) on the image"},
                                    {"y", x.to_string()},
                                    {"z (+) y", zl.to_string()},
                                    {"y (+) z", zr.to_string()}};
      }
    }
    Value lhs = eval_binop(oplus, x, eval_binop(oplus, y, w));
    Value rhs = eval_binop(oplus, eval_binop(oplus, x, y), w);
    if (lhs == rhs) return std::nullopt;
    return std::vector<Witness>{{"property", "(+) is associative on the image"},
                                {"x", x.to_string()},
                                {"y", y.to_string()},
                                {"w", w.to_string()},
                                {"lhs", lhs.to_string()},
                                {"rhs", rhs.to_string()}};
  });
  if (gate.verdict != Verdict::Pass) {
    CheckRecord rec;
    rec.id = "foldr-hom";
    rec.anchor = "Lemma foldr-hom";
    rec.verdict = Verdict::HypothesisNotMet;
    rec.instances = gate.instances;
    append_prefixed(rec.witnesses, "gate", gate);
    rec.detail = "hypothesis not met: (+) is not associative with identity z on the image";
    return single("foldr-hom", std::move(bounds), std::move(rec));
  }

  HomCandidate c = fold_candidate(otimes, oplus, z);
  CheckRecord p = hom_record("P", "", c, ca, max_len + 1, max_len, false);
  CheckRecord q = exchange_record(otimes, oplus, ca, img);
  auto rec = biconditional("foldr-hom", "Lemma foldr-hom", "P", p, "Q", q);
  rec.instances += gate.instances;
  return single("foldr-hom", std::move(bounds), std::move(rec));
}

}  // namespace nda
