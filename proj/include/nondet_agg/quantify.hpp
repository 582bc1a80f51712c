#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nondet_agg/report.hpp"

namespace nda {

/// One point of a finite product domain: an index per dimension.
using Instance = std::vector<std::size_t>;

/// Evaluates one instance of a property. Returns nullopt when it holds,
/// otherwise the witnesses describing the counterexample.
using InstanceCheck = std::function<std::optional<std::vector<Witness>>(const Instance&)>;

/// Largest product domain a single check may quantify over.
inline constexpr std::size_t kMaxInstances = std::size_t{1} << 26;

/// Product of dims; throws UsageError when it exceeds kMaxInstances.
std::size_t domain_size(const std::vector<std::size_t>& dims);

/// Decodes a flat index in mixed radix, first dimension most significant,
/// so flat order is lexicographic order over the dimensions.
Instance decode(std::size_t flat, const std::vector<std::size_t>& dims);

/// Sequences of length <= max_count over n symbols, shortest first, then
/// lexicographic. count_sequences saturates like count_lists; decode_sequence
/// maps a flat index in [0, count) to its symbol indices.
std::size_t count_sequences(std::size_t n, std::size_t max_count);
std::vector<std::size_t> decode_sequence(std::size_t flat, std::size_t n, std::size_t max_count);

/// Exhaustively checks `check` over the product of `dims` and returns a
/// record with the lexicographically first counterexample, if any.
/// Evaluation may be spread across workers; the result is the same for any
/// worker count.
CheckRecord quantify(std::string id, std::string anchor, const std::vector<std::size_t>& dims,
                     const InstanceCheck& check);

}  // namespace nda
