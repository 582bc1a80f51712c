#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace nda {

enum class Kind { ModInt, Int64, Float64, List };

std::string to_string(Kind kind);

/// Residue class modulo `modulus`; residue is always in [0, modulus).
struct ModInt {
  std::int64_t residue = 0;
  std::int64_t modulus = 2;

  bool operator==(const ModInt&) const = default;
};

class Value;
using ValList = std::vector<Value>;

/// A carrier element. Values of one kind are totally ordered; comparing
/// values of different kinds (or ModInts of different moduli) throws
/// KindError. Floats are always finite.
class Value {
 public:
  Value() : data_(std::int64_t{0}) {}

  static Value mod(std::int64_t residue, std::int64_t modulus);
  static Value integer(std::int64_t v);
  static Value real(double v);
  static Value list(ValList items);

  Kind kind() const noexcept;

  bool is_mod() const noexcept { return std::holds_alternative<ModInt>(data_); }
  bool is_int() const noexcept { return std::holds_alternative<std::int64_t>(data_); }
  bool is_float() const noexcept { return std::holds_alternative<double>(data_); }
  bool is_list() const noexcept { return std::holds_alternative<ListBox>(data_); }

  const ModInt& as_mod() const;
  std::int64_t as_int() const;
  double as_float() const;
  const ValList& as_list() const;

  /// True when both values can be compared: same kind, same modulus, and
  /// for lists, elements of a compatible kind.
  bool same_kind(const Value& other) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  struct ListBox {
    ValList items;
  };
  using Data = std::variant<ModInt, std::int64_t, double, ListBox>;

  explicit Value(Data data) : data_(std::move(data)) {}

  Data data_;
};

/// IEEE-754 totalOrder on doubles (-0.0 sorts before +0.0).
std::strong_ordering float_order(double a, double b) noexcept;

/// Total order used for canonical outcome sets. Throws KindError when the
/// kinds do not match.
std::strong_ordering compare(const Value& a, const Value& b);

std::string to_string(const ValList& xs);

/// Right fold helpers on lists.
ValList concat(const std::vector<ValList>& xss);

}  // namespace nda
