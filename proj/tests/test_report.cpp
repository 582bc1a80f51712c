#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "json.hpp"
#include "nondet_agg/error.hpp"
#include "nondet_agg/report.hpp"

using namespace nda;

namespace {

Report sample() {
  Report r;
  r.command = "nondet-agg check --ops \"a b.ops\"";
  r.bounds = {{"max_parts", "3"}, {"carrier_a", "mod 5"}};
  CheckRecord ok{"determinism", "Theorem aggregate-det", Verdict::Pass, {{"rdds_checked", "30784"}}, "deterministic", 30784};
  CheckRecord bad{"exchange", "exchange law", Verdict::Fail, {{"x", "1"}, {"note", "quote \" and\nnewline"}}, "", 7};
  CheckRecord gated{"foldr-hom", "Lemma foldr-hom", Verdict::HypothesisNotMet, {}, "gate failed", 3};
  CheckRecord skip{"converse-hom", "Theorem aggregate-hom", Verdict::Skipped, {}, "", 0};
  r.records = {ok, bad, gated, skip};
  r.exit_status = exit_status_for(r.records);
  return r;
}

}  // namespace

TEST_CASE("verdict names round-trip") {
  for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::HypothesisNotMet, Verdict::Skipped})
    CHECK(verdict_from_string(to_string(v)) == v);
  CHECK(to_string(Verdict::HypothesisNotMet) == "hypothesis-not-met");
  CHECK_THROWS_AS(verdict_from_string("maybe"), Error);
}

TEST_CASE("exit status is 1 only on a failed record") {
  const Report r = sample();
  CHECK(r.exit_status == 1);
  CHECK(exit_status_for({r.records[0], r.records[2], r.records[3]}) == 0);
  CHECK(exit_status_for({}) == 0);
}

TEST_CASE("JSON round-trips exactly") {
  const Report r = sample();
  const std::string text = to_json(r);
  CHECK(report_from_json(text) == r);
  CHECK(to_json(report_from_json(text)) == text);
  CHECK(text.back() == '\n');
}

TEST_CASE("JSON layout is fixed") {
  const std::string text = to_json(sample());
  const auto j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"tool_version", "command", "bounds", "records", "exit_status"});
  std::vector<std::string> rec_keys;
  for (const auto& item : j["records"][0].items()) rec_keys.push_back(item.key());
  CHECK(rec_keys == std::vector<std::string>{"id", "anchor", "verdict", "witnesses", "detail", "instances"});
  CHECK(j["records"][2]["verdict"] == "hypothesis-not-met");
  CHECK(j["tool_version"] == std::string(kToolVersion));
  CHECK(text.find("\n  \"command\"") != std::string::npos);
  // Identical reports give identical bytes.
  CHECK(to_json(sample()) == text);
}

TEST_CASE("malformed JSON is an error") {
  CHECK_THROWS_AS(report_from_json("{"), Error);
  CHECK_THROWS_AS(report_from_json("{\"tool_version\": \"x\"}"), Error);
}

TEST_CASE("text rendering") {
  const Report r = sample();
  const std::vector<double> ms{1.0, 2.5, 0.0, 0.0};
  const std::string text = to_text(r, ms);
  CHECK(text.find("bounds: max_parts=3 carrier_a=mod 5") != std::string::npos);
  CHECK(text.find("[PASS              ] determinism") != std::string::npos);
  CHECK(text.find("[HYPOTHESIS-NOT-MET] foldr-hom") != std::string::npos);
  CHECK(text.find("2.5 ms") != std::string::npos);
  CHECK(text.find("    x = 1\n") != std::string::npos);
  CHECK(text.find("exit status: 1\n") != std::string::npos);
  CHECK(to_text(r).find(" ms") == std::string::npos);
}

TEST_CASE("lookups") {
  const Report r = sample();
  REQUIRE(r.find("exchange") != nullptr);
  CHECK(r.find("exchange")->witness("x")->value == "1");
  CHECK(r.find("nope") == nullptr);
  CHECK(r.records[0].witness("nope") == nullptr);
}
