#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nondet_agg/carrier.hpp"
#include "nondet_agg/nondet.hpp"
#include "nondet_agg/opspec.hpp"
#include "nondet_agg/report.hpp"

namespace nda {

/// A distributed collection: a sequence of partitions, any of which may be
/// empty.
using Rdd = std::vector<ValList>;

std::string to_string(const Rdd& rdd);

inline constexpr std::size_t kMaxPartsCap = 6;
inline constexpr std::size_t kMaxRdds = std::size_t{1} << 21;

/// Every merge order of the partition folds, folded with ⊕:
///   foldr(⊕, z) <$> perm (map (foldr(⊗, z)) partitions)
NonDet aggregate(const OpSpec& ops, const Rdd& rdd);

/// Number of RDDs enumerate_rdds would produce (saturating).
std::size_t count_rdds(const CarrierSpec& ca, std::size_t max_parts, std::size_t max_len);

/// All RDDs of at most max_parts partitions, each of length <= max_len:
/// fewer partitions first, then lexicographic by partition in enum_lists order.
std::vector<Rdd> enumerate_rdds(const CarrierSpec& ca, std::size_t max_parts, std::size_t max_len);

/// Throws UsageError when the bounds exceed the partition cap or the RDD
/// budget and `override_guards` is false.
void check_rdd_guards(const CarrierSpec& ca, std::size_t max_parts, std::size_t max_len, bool override_guards);

struct DeterminismVerdict {
  bool deterministic = true;
  std::size_t outcome_count_max = 0;
  std::optional<std::pair<Rdd, NonDet>> counterexample;
  std::size_t rdds_checked = 0;
  std::size_t max_parts = 0;
  std::size_t max_len = 0;

  CheckRecord to_record() const;
};

/// Runs aggregate on every enumerated RDD; the counterexample is the first
/// RDD, in enumeration order, with more than one outcome.
DeterminismVerdict check_determinism(const OpSpec& ops, std::size_t max_parts, std::size_t max_len,
                                     bool override_guards = false);

/// Associativity and commutativity of ⊕, on all of carrier_b and on the
/// image of foldr(⊗, z) at image_bound. Predicts determinism iff both hold
/// on the full carrier. Skipped for float carriers.
Report predict_determinism(const OpSpec& ops, std::size_t image_bound);

/// Gated on the prediction: for every RDD, aggregate equals the single
/// sequential result foldr(⊕, z, map (foldr(⊗, z)) partitions).
Report check_theorem_aggregate_det(const OpSpec& ops, std::size_t max_parts, std::size_t max_len,
                                   bool override_guards = false);

/// Gated on ⊕ forming a commutative monoid with z on carrier_b and on the
/// exchange law over the image at max(image_bound, (max_parts - 1) * max_len):
/// for every RDD, aggregate equals {foldr(⊗, z, concat partitions)}.
Report check_corollary_det_hom(const OpSpec& ops, std::size_t max_parts, std::size_t max_len,
                               std::size_t image_bound, bool override_guards = false);

// The converse checks share one gate: aggregate equals
// {foldr(⊗, z, concat partitions)} on every enumerated RDD. Each states the
// bounds at which its conclusion follows from the gate.

/// For every RDD xss and every reordering yss of its partitions, the
/// sequential fold of concat xss equals the ⊕-merge of yss and of xss.
Report check_lemma_det_reasoning(const OpSpec& ops, std::size_t max_parts, std::size_t max_len,
                                 bool override_guards = false);

/// ⊕ restricted to the image of foldr(⊗, z): z is its identity and it is
/// commutative on lists up to min(image_bound, max_len), associative on
/// lists up to min(image_bound, max_len / 2). Needs max_parts >= 3.
Report check_converse_cmonoid(const OpSpec& ops, std::size_t max_parts, std::size_t max_len,
                              std::size_t image_bound, bool override_guards = false);

/// foldr(⊗, z) is a homomorphism to (⊕, z) with k = (⊗ z), for xs, ys of
/// length <= max_len. Needs max_parts >= 2.
Report check_converse_hom(const OpSpec& ops, std::size_t max_parts, std::size_t max_len,
                          bool override_guards = false);

/// Every merge order of float partition sums under ⊕ (the partitions are
/// folded with ⊗). A non-finite intermediate counts as a divergence event.
Report float_divergence_demo(const Rdd& rdd, const OpExpr& oplus, const OpExpr& otimes, const Value& z);

struct FloatPreset {
  std::string name;
  std::string description;
  Rdd rdd;
};

FloatPreset float_preset(const std::string& name);
std::vector<std::string> float_preset_names();

}  // namespace nda
