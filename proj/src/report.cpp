#include "nondet_agg/report.hpp"

#include <cstdio>
#include "json.hpp"

#include "nondet_agg/error.hpp"

namespace nda {

using ordered_json = nlohmann::ordered_json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "pass") return Verdict::Pass;
  if (s == "fail") return Verdict::Fail;
  if (s == "hypothesis-not-met") return Verdict::HypothesisNotMet;
  if (s == "skipped") return Verdict::Skipped;
  throw Error("unknown verdict '" + std::string(s) + "'");
}

const Witness* CheckRecord::witness(std::string_view name) const {
  for (const auto& w : witnesses) {
    if (w.name == name) return &w;
  }
  return nullptr;
}

const CheckRecord* Report::find(std::string_view id) const {
  for (const auto& r : records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

int exit_status_for(const std::vector<CheckRecord>& records) {
  for (const auto& r : records) {
    if (r.verdict == Verdict::Fail) return 1;
  }
  return 0;
}

std::string to_json(const Report& report) {
  ordered_json j;
  j["tool_version"] = report.tool_version;
  j["command"] = report.command;
  ordered_json bounds = ordered_json::array();
  for (const auto& [k, v] : report.bounds) bounds.push_back(ordered_json{{"name", k}, {"value", v}});
  j["bounds"] = std::move(bounds);
  ordered_json records = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json rec;
    rec["id"] = r.id;
    rec["anchor"] = r.anchor;
    rec["verdict"] = to_string(r.verdict);
    ordered_json ws = ordered_json::array();
    for (const auto& w : r.witnesses) ws.push_back(ordered_json{{"name", w.name}, {"value", w.value}});
    rec["witnesses"] = std::move(ws);
    rec["detail"] = r.detail;
    rec["instances"] = r.instances;
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  j["exit_status"] = report.exit_status;
  return j.dump(2) + "\n";
}

Report report_from_json(std::string_view json) {
  ordered_json j;
  try {
    j = ordered_json::parse(json);
    Report r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    for (const auto& b : j.at("bounds")) {
      r.bounds.emplace_back(b.at("name").get<std::string>(), b.at("value").get<std::string>());
    }
    for (const auto& rec : j.at("records")) {
      CheckRecord c;
      c.id = rec.at("id").get<std::string>();
      c.anchor = rec.at("anchor").get<std::string>();
      c.verdict = verdict_from_string(rec.at("verdict").get<std::string>());
      for (const auto& w : rec.at("witnesses")) {
        c.witnesses.push_back(Witness{w.at("name").get<std::string>(), w.at("value").get<std::string>()});
      }
      c.detail = rec.at("detail").get<std::string>();
      c.instances = rec.at("instances").get<std::uint64_t>();
      r.records.push_back(std::move(c));
    }
    r.exit_status = j.at("exit_status").get<int>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report JSON: ") + e.what());
  }
}

namespace {

std::string upper_verdict(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::HypothesisNotMet: return "HYPOTHESIS-NOT-MET";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

}  // namespace

std::string to_text(const Report& report, std::span<const double> elapsed_ms) {
  std::string out = "nondet-agg " + report.tool_version + " :: " + report.command + "\n";
  if (!report.bounds.empty()) {
    out += "bounds:";
    for (const auto& [k, v] : report.bounds) out += " " + k + "=" + v;
    out += "\n";
  }
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& r = report.records[i];
    char line[96];
    std::snprintf(line, sizeof line, "[%-18s] ", upper_verdict(r.verdict).c_str());
    out += line + r.id + "  (" + r.anchor + ")";
    out += "  instances=" + std::to_string(r.instances);
    if (i < elapsed_ms.size()) {
      std::snprintf(line, sizeof line, "  %.1f ms", elapsed_ms[i]);
      out += line;
    }
    out += "\n";
    if (!r.detail.empty()) out += "    " + r.detail + "\n";
    for (const auto& w : r.witnesses) out += "    " + w.name + " = " + w.value + "\n";
  }
  out += "exit status: " + std::to_string(report.exit_status) + "\n";
  return out;
}

}  // namespace nda
