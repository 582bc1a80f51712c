#include "nondet_agg/carrier.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <limits>

#include "nondet_agg/error.hpp"

namespace nda {

CarrierSpec CarrierSpec::mod(std::int64_t modulus) {
  if (modulus < 2) throw UsageError("modulus must be at least 2, got " + std::to_string(modulus));
  CarrierSpec c;
  c.shape_ = Shape::Mod;
  c.modulus_ = modulus;
  return c;
}

CarrierSpec CarrierSpec::int_range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw UsageError("empty int range " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  CarrierSpec c;
  c.shape_ = Shape::IntRange;
  c.lo_ = lo;
  c.hi_ = hi;
  return c;
}

CarrierSpec CarrierSpec::float_set(std::vector<double> values) {
  if (values.empty()) throw UsageError("float carrier needs at least one value");
  for (double v : values) {
    if (!std::isfinite(v)) throw UsageError("float carrier values must be finite");
  }
  std::sort(values.begin(), values.end(),
            [](double a, double b) { return float_order(a, b) < 0; });
  values.erase(std::unique(values.begin(), values.end(),
                           [](double a, double b) { return float_order(a, b) == 0; }),
               values.end());
  CarrierSpec c;
  c.shape_ = Shape::FloatSet;
  c.floats_ = std::move(values);
  return c;
}

CarrierSpec CarrierSpec::list_of(CarrierSpec inner, std::size_t max_len) {
  CarrierSpec c;
  c.shape_ = Shape::ListOf;
  c.max_len_ = max_len;
  c.inner_ = std::make_shared<const CarrierSpec>(std::move(inner));
  return c;
}

Kind CarrierSpec::kind() const noexcept {
  switch (shape_) {
    case Shape::Mod: return Kind::ModInt;
    case Shape::IntRange: return Kind::Int64;
    case Shape::FloatSet: return Kind::Float64;
    case Shape::ListOf: return Kind::List;
  }
  return Kind::Int64;
}

const CarrierSpec& CarrierSpec::inner() const {
  if (!inner_) throw UsageError("carrier " + to_string() + " has no element carrier");
  return *inner_;
}

bool CarrierSpec::admits(const Value& v) const noexcept {
  switch (shape_) {
    case Shape::Mod: return v.is_mod() && v.as_mod().modulus == modulus_;
    case Shape::IntRange: return v.is_int();
    case Shape::FloatSet: return v.is_float();
    case Shape::ListOf: {
      if (!v.is_list()) return false;
      const auto& xs = v.as_list();
      return xs.empty() || inner_->admits(xs.front());
    }
  }
  return false;
}

std::size_t CarrierSpec::size() const {
  switch (shape_) {
    case Shape::Mod: return static_cast<std::size_t>(modulus_);
    case Shape::IntRange: {
      // hi - lo may overflow int64 for extreme ranges.
      auto span = static_cast<unsigned long long>(hi_) - static_cast<unsigned long long>(lo_);
      if (span >= std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
      return static_cast<std::size_t>(span) + 1;
    }
    case Shape::FloatSet: return floats_.size();
    case Shape::ListOf: return count_lists(inner_->size(), max_len_);
  }
  return 0;
}

namespace {

std::string format_double(double d) { return Value::real(d).to_string(); }

}  // namespace

std::string CarrierSpec::to_string() const {
  switch (shape_) {
    case Shape::Mod: return "mod " + std::to_string(modulus_);
    case Shape::IntRange: return "int " + std::to_string(lo_) + ".." + std::to_string(hi_);
    case Shape::FloatSet: {
      std::string s = "float {";
      for (std::size_t i = 0; i < floats_.size(); ++i) {
        if (i) s += ", ";
        s += format_double(floats_[i]);
      }
      return s + "}";
    }
    case Shape::ListOf: return "list " + std::to_string(max_len_) + " of " + inner_->to_string();
  }
  return "?";
}

bool CarrierSpec::operator==(const CarrierSpec& other) const {
  if (shape_ != other.shape_) return false;
  switch (shape_) {
    case Shape::Mod: return modulus_ == other.modulus_;
    case Shape::IntRange: return lo_ == other.lo_ && hi_ == other.hi_;
    case Shape::FloatSet:
      return std::equal(floats_.begin(), floats_.end(), other.floats_.begin(), other.floats_.end(),
                        [](double a, double b) { return float_order(a, b) == 0; });
    case Shape::ListOf: return max_len_ == other.max_len_ && *inner_ == *other.inner_;
  }
  return false;
}

namespace {

class CarrierScanner {
 public:
  CarrierScanner(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line), column_(column) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_ + pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip_ws();
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  double real() {
    skip_ws();
    double v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  CarrierSpec carrier() {
    std::string kw = word();
    try {
      if (kw == "mod") {
        std::int64_t m = integer();
        if (m < 2) fail("modulus must be at least 2");
        return CarrierSpec::mod(m);
      }
      if (kw == "int") {
        std::int64_t lo = integer();
        expect("..");
        std::int64_t hi = integer();
        if (lo > hi) fail("empty int range");
        return CarrierSpec::int_range(lo, hi);
      }
      if (kw == "float") {
        expect("{");
        std::vector<double> vs;
        if (!accept('}')) {
          do {
            vs.push_back(real());
          } while (accept(','));
          expect("}");
        }
        if (vs.empty()) fail("float carrier needs at least one value");
        return CarrierSpec::float_set(std::move(vs));
      }
      if (kw == "list") {
        std::int64_t n = integer();
        if (n < 0) fail("list length bound must be nonnegative");
        if (word() != "of") fail("expected 'of'");
        CarrierSpec inner = carrier();
        return CarrierSpec::list_of(std::move(inner), static_cast<std::size_t>(n));
      }
    } catch (const UsageError& e) {
      fail(e.what());
    }
    fail(kw.empty() ? "expected a carrier (mod, int, float or list)" : "unknown carrier kind '" + kw + "'");
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

}  // namespace

CarrierSpec CarrierSpec::parse(std::string_view text, std::size_t line, std::size_t column) {
  CarrierScanner scanner(text, line, column);
  CarrierSpec c = scanner.carrier();
  if (!scanner.at_end()) scanner.fail("trailing characters after carrier");
  return c;
}

std::size_t count_lists(std::size_t n, std::size_t max_len) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  std::size_t power = 1;
  for (std::size_t k = 0; k <= max_len; ++k) {
    if (total > kMax - power) return kMax;
    total += power;
    if (k == max_len) break;
    if (n != 0 && power > kMax / n) return kMax;
    power *= n;
  }
  return total;
}

std::vector<Value> enum_values(const CarrierSpec& c) {
  if (c.size() > kMaxEnumeration) {
    throw UsageError("carrier " + c.to_string() + " is too large to enumerate");
  }
  std::vector<Value> out;
  switch (c.shape()) {
    case CarrierSpec::Shape::Mod:
      for (std::int64_t r = 0; r < c.modulus(); ++r) out.push_back(Value::mod(r, c.modulus()));
      break;
    case CarrierSpec::Shape::IntRange:
      for (std::int64_t v = c.lo();; ++v) {
        out.push_back(Value::integer(v));
        if (v == c.hi()) break;
      }
      break;
    case CarrierSpec::Shape::FloatSet:
      for (double d : c.floats()) out.push_back(Value::real(d));
      break;
    case CarrierSpec::Shape::ListOf:
      for (auto& xs : enum_lists(c.inner(), c.max_len())) out.push_back(Value::list(std::move(xs)));
      break;
  }
  return out;
}

std::vector<ValList> enum_lists(const std::vector<Value>& elements, std::size_t max_len) {
  if (count_lists(elements.size(), max_len) > kMaxEnumeration) {
    throw UsageError("list enumeration of " + std::to_string(elements.size()) +
                     " elements up to length " + std::to_string(max_len) + " is too large");
  }
  std::vector<ValList> out;
  out.emplace_back();
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len && !elements.empty(); ++len) {
    // Lists of length len are element-prefixed extensions of the previous
    // level, so each level stays lexicographically ordered.
    std::size_t level_end = out.size();
    for (const auto& head : elements) {
      for (std::size_t i = level_begin; i < level_end; ++i) {
        ValList xs;
        xs.reserve(len);
        xs.push_back(head);
        xs.insert(xs.end(), out[i].begin(), out[i].end());
        out.push_back(std::move(xs));
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<ValList> enum_lists(const CarrierSpec& c, std::size_t max_len) {
  return enum_lists(enum_values(c), max_len);
}

}  // namespace nda
