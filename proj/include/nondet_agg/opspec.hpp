#pragma once

#include <string>
#include <string_view>

#include "nondet_agg/carrier.hpp"
#include "nondet_agg/expr.hpp"
#include "nondet_agg/value.hpp"

namespace nda {

/// An aggregation (⊕, ⊗, z) together with the carriers it ranges over.
///   oplus  : b × b → b   (merges partition results)
///   otimes : a × b → b   (folds a partition)
///   z      : b
struct OpSpec {
  OpExpr oplus;
  OpExpr otimes;
  Value z;
  CarrierSpec carrier_a;
  CarrierSpec carrier_b;

  /// Builds and validates: z must have carrier_b's kind, and both operators
  /// must evaluate to carrier_b-kind values on every enumerated input.
  static OpSpec make(OpExpr oplus, OpExpr otimes, Value z, CarrierSpec carrier_a,
                     CarrierSpec carrier_b);

  /// Serializes back to the line-oriented document format.
  std::string to_text() const;
};

/// Parses the line-oriented operator-spec document:
///
///   # comment
///   carrier_a: mod 5            (defaults to carrier_b)
///   carrier_b: int 0..7         (defaults to carrier_a)
///   oplus: <expr in x, y>
///   otimes: <expr in x, y>
///   z: <literal>
///
/// Throws ParseError with line/column on any syntax or validation error.
OpSpec parse_opspec(std::string_view text);

/// Reads a literal (optionally signed number) in the kind of `carrier`.
Value parse_literal(std::string_view text, const CarrierSpec& carrier);

}  // namespace nda
