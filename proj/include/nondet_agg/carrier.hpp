#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "nondet_agg/value.hpp"

namespace nda {

/// A finite, enumerable carrier: `mod m`, `int lo..hi`, `float {v, ...}`
/// or `list n of <carrier>` (all lists of length <= n over the inner carrier).
class CarrierSpec {
 public:
  enum class Shape { Mod, IntRange, FloatSet, ListOf };

  static CarrierSpec mod(std::int64_t modulus);
  static CarrierSpec int_range(std::int64_t lo, std::int64_t hi);
  static CarrierSpec float_set(std::vector<double> values);
  static CarrierSpec list_of(CarrierSpec inner, std::size_t max_len);

  /// Parses the textual form used in operator-spec files and on the
  /// command line. Throws ParseError (line 1 unless `line` is given).
  static CarrierSpec parse(std::string_view text, std::size_t line = 1, std::size_t column = 1);

  Shape shape() const noexcept { return shape_; }
  Kind kind() const noexcept;
  std::int64_t modulus() const noexcept { return modulus_; }
  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return hi_; }
  const std::vector<double>& floats() const noexcept { return floats_; }
  std::size_t max_len() const noexcept { return max_len_; }
  const CarrierSpec& inner() const;

  /// Whether `v` has this carrier's kind (and modulus). Membership in the
  /// enumerated range is not required.
  bool admits(const Value& v) const noexcept;

  /// Number of values enum_values would produce.
  std::size_t size() const;

  /// Canonical text, re-parseable by parse().
  std::string to_string() const;

  bool operator==(const CarrierSpec& other) const;

 private:
  CarrierSpec() = default;

  Shape shape_ = Shape::Mod;
  std::int64_t modulus_ = 2;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = 0;
  std::vector<double> floats_;
  std::size_t max_len_ = 0;
  std::shared_ptr<const CarrierSpec> inner_;
};

/// Largest carrier (and list-enumeration) size accepted before a spec is
/// treated as unbounded.
inline constexpr std::size_t kMaxEnumeration = std::size_t{1} << 22;

/// All carrier values in ascending total order, without duplicates.
std::vector<Value> enum_values(const CarrierSpec& c);

/// All lists over enum_values(c) of length <= max_len: shortest first, then
/// lexicographic in carrier order.
std::vector<ValList> enum_lists(const CarrierSpec& c, std::size_t max_len);

/// Same ordering as enum_lists, over an explicit element sequence.
std::vector<ValList> enum_lists(const std::vector<Value>& elements, std::size_t max_len);

/// Σ_{k<=max_len} n^k, saturating at SIZE_MAX.
std::size_t count_lists(std::size_t n, std::size_t max_len);

}  // namespace nda
