#pragma once

#include <cstddef>

#include "nondet_agg/carrier.hpp"
#include "nondet_agg/expr.hpp"
#include "nondet_agg/functions.hpp"
#include "nondet_agg/nondet.hpp"
#include "nondet_agg/report.hpp"

namespace nda {

inline constexpr std::size_t kDefaultMaxLen = 4;
inline constexpr std::size_t kMaxLenCap = 7;

/// All ways of inserting x into xs, one outcome per position (equal
/// results collapse). Outcomes are list values.
NonDet insert(const Value& x, const ValList& xs);

/// All permutations of xs, built right to left by repeated insert.
NonDet perm(const ValList& xs);

/// x1 ⊙ (x2 ⊙ (... ⊙ z)), with the element as x and the accumulator as y.
Value foldr_list(const OpExpr& op, const Value& z, const ValList& xs);

/// Map and filter on list values.
ValList map_list(const PureFn& g, const ValList& xs);
ValList filter_list(const Predicate& p, const ValList& xs);

/// A right fold x ⊙ acc with seed z; the element ranges over one carrier,
/// the accumulator over another.
struct FoldSpec {
  OpExpr odot;
  Value z;
};

/// x ⊙ (y ⊙ w) = y ⊙ (x ⊙ w) for x, y in ca and w in cb.
Report check_exchange_odot(const FoldSpec& f, const CarrierSpec& ca, const CarrierSpec& cb);

/// fold <$> perm xs = {fold xs} for every xs of length <= max_len over ca.
Report check_lemma_fold_perm(const FoldSpec& f, const CarrierSpec& ca, const CarrierSpec& cb,
                             std::size_t max_len = kDefaultMaxLen);

/// fold <$> insert x xs = {fold (x:xs)}.
Report check_lemma_fold_insert(const FoldSpec& f, const CarrierSpec& ca, const CarrierSpec& cb,
                               std::size_t max_len = kDefaultMaxLen);

/// perm (map g xs) = map g <$> perm xs.
Report check_lemma_perm_map(const PureFn& g, const CarrierSpec& ca, std::size_t max_len = kDefaultMaxLen);

/// insert (g x) (map g xs) = map g <$> insert x xs.
Report check_lemma_insert_map(const PureFn& g, const CarrierSpec& ca, std::size_t max_len = kDefaultMaxLen);

/// perm (filter p xs) = filter p <$> perm xs.
Report check_lemma_perm_filter(const Predicate& p, const CarrierSpec& ca,
                               std::size_t max_len = kDefaultMaxLen);

/// xs is one of the outcomes of perm xs.
Report check_lemma_perm_id(const CarrierSpec& ca, std::size_t max_len = kDefaultMaxLen);

/// Throws UsageError when max_len exceeds kMaxLenCap.
void check_max_len(std::size_t max_len);

}  // namespace nda
