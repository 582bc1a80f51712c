#include "nondet_agg/opspec.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "nondet_agg/error.hpp"

namespace nda {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void check_closure(const char* name, const OpExpr& e, const std::vector<Value>& xs,
                   const std::vector<Value>& ys, const CarrierSpec& result) {
  try {
    for (const auto& x : xs) {
      for (const auto& y : ys) {
        Value v = eval_binop(e, x, y);
        if (!result.admits(v)) {
          throw KindError("yields " + v.to_string() + " (" + to_string(v.kind()) + ") at x=" +
                          x.to_string() + ", y=" + y.to_string() + ", outside carrier " +
                          result.to_string());
        }
      }
    }
  } catch (const Error& err) {
    throw KindError(std::string(name) + ": " + err.what());
  }
}

}  // namespace

OpSpec OpSpec::make(OpExpr oplus, OpExpr otimes, Value z, CarrierSpec carrier_a,
                    CarrierSpec carrier_b) {
  if (!carrier_b.admits(z)) {
    throw KindError("z = " + z.to_string() + " does not belong to carrier_b (" + carrier_b.to_string() +
                    ")");
  }
  const std::size_t na = carrier_a.size();
  const std::size_t nb = carrier_b.size();
  if (nb != 0 && (na > kMaxEnumeration / nb || nb > kMaxEnumeration / nb)) {
    throw UsageError("carriers too large for exhaustive checking");
  }
  auto as = enum_values(carrier_a);
  auto bs = enum_values(carrier_b);
  check_closure("oplus", oplus, bs, bs, carrier_b);
  check_closure("otimes", otimes, as, bs, carrier_b);
  return OpSpec{std::move(oplus), std::move(otimes), std::move(z), std::move(carrier_a),
                std::move(carrier_b)};
}

std::string OpSpec::to_text() const {
  return "carrier_a: " + carrier_a.to_string() + "\ncarrier_b: " + carrier_b.to_string() +
         "\noplus: " + print(oplus) + "\notimes: " + print(otimes) + "\nz: " + z.to_string() + "\n";
}

namespace {

Value parse_literal_at(std::string_view text, const CarrierSpec& carrier, std::size_t line,
                       std::size_t column) {
  std::string_view t = trim(text);
  if (carrier.kind() == Kind::List) {
    if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
      throw ParseError("expected a list literal like [1,2]", line, column);
    }
    ValList items;
    std::string_view body = trim(t.substr(1, t.size() - 2));
    // Nested lists are split at top-level commas only.
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size() && !body.empty(); ++i) {
      if (i == body.size() || (body[i] == ',' && depth == 0)) {
        items.push_back(parse_literal_at(body.substr(start, i - start), carrier.inner(), line, column));
        start = i + 1;
      } else if (body[i] == '[') {
        ++depth;
      } else if (body[i] == ']') {
        --depth;
      }
    }
    if (items.size() > carrier.max_len()) {
      throw ParseError("list literal longer than the carrier bound", line, column);
    }
    return Value::list(std::move(items));
  }
  OpExpr e = parse_expr(t, line, column);
  // A literal is a number, optionally negated; anything else is rejected.
  const OpExpr* cur = &e;
  while (auto* neg = std::get_if<OpExpr::Neg>(&cur->node())) cur = neg->arg.get();
  if (!std::holds_alternative<OpExpr::Literal>(cur->node())) {
    throw ParseError("expected a numeric literal, got '" + std::string(t) + "'", line, column);
  }
  Value context;
  switch (carrier.kind()) {
    case Kind::ModInt: context = Value::mod(0, carrier.modulus()); break;
    case Kind::Int64: context = Value::integer(0); break;
    default: context = Value::real(0.0); break;
  }
  try {
    return eval_binop(e, context, context);
  } catch (const Error& err) {
    throw ParseError("bad literal '" + std::string(t) + "' for carrier " + carrier.to_string() + ": " +
                         err.what(),
                     line, column);
  }
}

}  // namespace

Value parse_literal(std::string_view text, const CarrierSpec& carrier) {
  return parse_literal_at(text, carrier, 1, 1);
}

OpSpec parse_opspec(std::string_view text) {
  struct Entry {
    std::string value;
    std::size_t line;
    std::size_t column;
  };
  std::map<std::string, Entry> entries;
  std::optional<OpExpr> oplus;
  std::optional<OpExpr> otimes;
  std::optional<CarrierSpec> carrier_a;
  std::optional<CarrierSpec> carrier_b;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (trim(raw).empty()) continue;

    auto colon = raw.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected 'key: value'", line_no, raw.size() - trim(raw).size() + 1);
    }
    std::string key(trim(raw.substr(0, colon)));
    std::string_view rest = raw.substr(colon + 1);
    std::size_t column = colon + 2;

    if (key != "carrier_a" && key != "carrier_b" && key != "oplus" && key != "otimes" && key != "z") {
      throw ParseError("unknown key '" + key + "'", line_no, 1);
    }
    if (entries.count(key)) throw ParseError("duplicate key '" + key + "'", line_no, 1);
    entries[key] = Entry{std::string(rest), line_no, column};

    if (key == "oplus") oplus = parse_expr(rest, line_no, column);
    if (key == "otimes") otimes = parse_expr(rest, line_no, column);
    if (key == "carrier_a") carrier_a = CarrierSpec::parse(rest, line_no, column);
    if (key == "carrier_b") carrier_b = CarrierSpec::parse(rest, line_no, column);
  }

  const std::size_t last = line_no;
  if (!carrier_a && !carrier_b) throw ParseError("missing carrier_a or carrier_b", last, 1);
  if (!carrier_a) carrier_a = carrier_b;
  if (!carrier_b) carrier_b = carrier_a;
  if (!oplus) throw ParseError("missing key 'oplus'", last, 1);
  if (!otimes) throw ParseError("missing key 'otimes'", last, 1);
  if (!entries.count("z")) throw ParseError("missing key 'z'", last, 1);

  const Entry& ze = entries["z"];
  Value z = parse_literal_at(ze.value, *carrier_b, ze.line, ze.column);

  try {
    return OpSpec::make(*oplus, *otimes, z, *carrier_a, *carrier_b);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    // Attribute the failure to the operator it came from when possible.
    std::string what = err.what();
    const char* key = what.rfind("otimes", 0) == 0 ? "otimes" : "oplus";
    if (what.find("z = ") == 0) key = "z";
    const Entry& e = entries[key];
    throw ParseError(what, e.line, e.column);
  }
}

}  // namespace nda
