#include "nondet_agg/value.hpp"

#include <bit>
#include <charconv>
#include <limits>
#include <cmath>

#include "nondet_agg/error.hpp"

namespace nda {

std::string to_string(Kind kind) {
  switch (kind) {
    case Kind::ModInt: return "mod";
    case Kind::Int64: return "int";
    case Kind::Float64: return "float";
    case Kind::List: return "list";
  }
  return "?";
}

Value Value::mod(std::int64_t residue, std::int64_t modulus) {
  if (modulus < 2) throw KindError("modulus must be at least 2, got " + std::to_string(modulus));
  std::int64_t r = residue % modulus;
  if (r < 0) r += modulus;
  return Value(Data(ModInt{r, modulus}));
}

Value Value::integer(std::int64_t v) { return Value(Data(v)); }

Value Value::real(double v) {
  if (!std::isfinite(v)) throw KindError("float values must be finite");
  return Value(Data(v));
}

Value Value::list(ValList items) {
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (!items[0].same_kind(items[i])) {
      throw KindError("list elements must share one kind: " + items[0].to_string() + " vs " +
                      items[i].to_string());
    }
  }
  return Value(Data(ListBox{std::move(items)}));
}

Kind Value::kind() const noexcept {
  switch (data_.index()) {
    case 0: return Kind::ModInt;
    case 1: return Kind::Int64;
    case 2: return Kind::Float64;
    default: return Kind::List;
  }
}

const ModInt& Value::as_mod() const {
  if (!is_mod()) throw KindError("expected a mod value, got " + to_string());
  return std::get<ModInt>(data_);
}

std::int64_t Value::as_int() const {
  if (!is_int()) throw KindError("expected an int value, got " + to_string());
  return std::get<std::int64_t>(data_);
}

double Value::as_float() const {
  if (!is_float()) throw KindError("expected a float value, got " + to_string());
  return std::get<double>(data_);
}

const ValList& Value::as_list() const {
  if (!is_list()) throw KindError("expected a list value, got " + to_string());
  return std::get<ListBox>(data_).items;
}

bool Value::same_kind(const Value& other) const noexcept {
  if (data_.index() != other.data_.index()) return false;
  if (is_mod()) return std::get<ModInt>(data_).modulus == std::get<ModInt>(other.data_).modulus;
  if (is_list()) {
    const auto& a = std::get<ListBox>(data_).items;
    const auto& b = std::get<ListBox>(other.data_).items;
    if (a.empty() || b.empty()) return true;
    return a.front().same_kind(b.front());
  }
  return true;
}

namespace {

std::string format_double(double d) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, d);
  std::string s(buf, end);
  // Keep floats visually distinct from integers.
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

}  // namespace

std::string Value::to_string() const {
  switch (kind()) {
    case Kind::ModInt: return std::to_string(std::get<ModInt>(data_).residue);
    case Kind::Int64: return std::to_string(std::get<std::int64_t>(data_));
    case Kind::Float64: return format_double(std::get<double>(data_));
    case Kind::List: return nda::to_string(std::get<ListBox>(data_).items);
  }
  return "?";
}

std::string to_string(const ValList& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += xs[i].to_string();
  }
  return out + "]";
}

std::strong_ordering float_order(double a, double b) noexcept {
  auto key = [](double d) {
    auto bits = std::bit_cast<std::int64_t>(d);
    return bits < 0 ? bits ^ std::numeric_limits<std::int64_t>::max() : bits;
  };
  return key(a) <=> key(b);
}

std::strong_ordering compare(const Value& a, const Value& b) {
  if (!a.same_kind(b)) {
    throw KindError("cannot compare " + a.to_string() + " (" + to_string(a.kind()) + ") with " +
                    b.to_string() + " (" + to_string(b.kind()) + ")");
  }
  switch (a.kind()) {
    case Kind::ModInt: return a.as_mod().residue <=> b.as_mod().residue;
    case Kind::Int64: return a.as_int() <=> b.as_int();
    case Kind::Float64: return float_order(a.as_float(), b.as_float());
    case Kind::List: {
      const auto& xs = a.as_list();
      const auto& ys = b.as_list();
      std::size_t n = std::min(xs.size(), ys.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (auto c = compare(xs[i], ys[i]); c != 0) return c;
      }
      return xs.size() <=> ys.size();
    }
  }
  return std::strong_ordering::equal;
}

bool operator==(const Value& a, const Value& b) { return compare(a, b) == 0; }

std::strong_ordering operator<=>(const Value& a, const Value& b) { return compare(a, b); }

ValList concat(const std::vector<ValList>& xss) {
  ValList out;
  for (const auto& xs : xss) out.insert(out.end(), xs.begin(), xs.end());
  return out;
}

}  // namespace nda
