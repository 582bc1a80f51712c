#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nondet_agg/carrier.hpp"
#include "nondet_agg/functions.hpp"
#include "nondet_agg/nondet.hpp"
#include "nondet_agg/report.hpp"

namespace nda {

inline constexpr std::size_t kDefaultSetBound = 3;

/// Every NonDet whose outcomes are a subset of `values` with at most
/// `max_size` elements; smaller sets first, then lexicographic.
std::vector<NonDet> enum_subsets(const std::vector<Value>& values, std::size_t max_size);

/// Ids of the law catalogue, in report order.
const std::vector<std::string>& law_ids();

/// Runs the whole law catalogue: monad laws, choice as a commutative
/// idempotent monoid, distribution and zero laws for bind, the induced laws
/// for <$>, the rotation laws between <$>, <•>, =<< and <=<, and the two
/// properties the converse aggregation theorems assume (mplus-return,
/// restricted to nonempty operands, and return-injective).
///
/// Quantifies over carrier values, both function tables, and every subset
/// of the carrier of size <= set_bound. Throws UsageError on an empty
/// carrier or empty arrow table.
Report check_monad_laws(const CarrierSpec& carrier, const std::vector<Kleisli>& arrows,
                        std::size_t set_bound = kDefaultSetBound,
                        const std::vector<PureFn>& fns = default_pure_table());

}  // namespace nda
