#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nda {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Verdict { Pass, Fail, HypothesisNotMet, Skipped };

std::string to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

struct Witness {
  std::string name;
  std::string value;

  bool operator==(const Witness&) const = default;
};

/// Result of one law, lemma or theorem check.
struct CheckRecord {
  std::string id;      // stable machine id, e.g. "fold-perm"
  std::string anchor;  // human-facing name of the property, e.g. "Lemma fold-perm"
  Verdict verdict = Verdict::Pass;
  std::vector<Witness> witnesses;
  std::string detail;
  std::uint64_t instances = 0;  // quantified instances evaluated

  bool operator==(const CheckRecord&) const = default;

  const Witness* witness(std::string_view name) const;
};

struct Report {
  std::string tool_version = std::string(kToolVersion);
  std::string command;
  std::vector<std::pair<std::string, std::string>> bounds;
  std::vector<CheckRecord> records;
  int exit_status = 0;

  bool operator==(const Report&) const = default;

  const CheckRecord* find(std::string_view id) const;
};

/// 1 if any record failed, else 0.
int exit_status_for(const std::vector<CheckRecord>& records);

/// Canonical JSON: fixed key order, two-space indentation, integers only,
/// trailing newline. Identical reports serialize to identical bytes.
std::string to_json(const Report& report);
Report report_from_json(std::string_view json);

/// Human-readable rendering; elapsed_ms, when given, has one entry per record.
std::string to_text(const Report& report, std::span<const double> elapsed_ms = {});

}  // namespace nda
