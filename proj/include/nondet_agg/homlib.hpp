#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nondet_agg/carrier.hpp"
#include "nondet_agg/expr.hpp"
#include "nondet_agg/report.hpp"

namespace nda {

/// Values reachable as foldr(⊗, z, xs) for lists of length <= max_len.
struct ImageSet {
  std::vector<Value> values;  // ascending
  std::size_t max_len = 0;
  bool saturated = false;  // one more element of length would add nothing

  bool contains(const Value& v) const;
};

/// Computed level by level: I_0 = {z}, I_(k+1) = I_k ∪ {x ⊗ s | x in ca, s in I_k}.
ImageSet image_set(const OpExpr& otimes, const Value& z, const CarrierSpec& ca, std::size_t max_len);

/// A list function h paired with the (⊕, z) it should be a homomorphism
/// into. With `otimes` set, the singleton case is k x = x ⊗ z; otherwise
/// k = h . wrap.
struct HomCandidate {
  std::string name;
  std::function<Value(const ValList&)> h;
  OpExpr oplus;
  Value z;
  std::optional<OpExpr> otimes;
};

/// h = foldr(⊗, z) with k = (⊗ z).
HomCandidate fold_candidate(const OpExpr& otimes, const OpExpr& oplus, const Value& z);

/// h [] = z, h [x] = k x, and h (xs ++ ys) = h xs ⊕ h ys for xs, ys of
/// length <= max_len. Witness "equation" names the first failing case.
Report check_hom_properties(const HomCandidate& c, const CarrierSpec& ca, std::size_t max_len);

/// Compares two bounded statements and passes when they agree:
///   A: foldr(⊕, z, map h xss) = h (concat xss) for xss of at most
///      max_parts parts, each of length <= max_len;
///   B: h is a homomorphism with k = h . wrap, with xs bounded by max_len
///      and ys by (max_parts - 1) * max_len.
/// At these bounds A and B are equivalent, so a mismatch signals a bug.
Report check_lemma_hom_concat(const HomCandidate& c, const CarrierSpec& ca, std::size_t max_parts,
                              std::size_t max_len);

/// x ⊗ (y ⊕ w) = (x ⊗ y) ⊕ w for x in ca and y, w in the image of
/// foldr(⊗, z) at image_bound.
Report check_exchange(const OpExpr& otimes, const OpExpr& oplus, const Value& z, const CarrierSpec& ca,
                      std::size_t image_bound);

/// With ⊕ associative on the image I (lists of length <= max_len) and z
/// its identity there, compares
///   P: foldr(⊗, z)(xs ++ ys) = foldr(⊗, z) xs ⊕ foldr(⊗, z) ys for
///      |xs| <= max_len + 1, |ys| <= max_len;
///   Q: the exchange law on I.
/// Reports hypothesis-not-met when the gate fails.
Report check_lemma_foldr_hom(const OpExpr& otimes, const OpExpr& oplus, const Value& z, const CarrierSpec& ca,
                             std::size_t max_len);

}  // namespace nda
