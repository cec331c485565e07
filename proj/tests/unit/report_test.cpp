#include "doctest.h"

#include "ggp/report.hpp"
#include "helpers.hpp"

using namespace ggp;
using report::json;

TEST_CASE("signs and characters") {
  CHECK(report::to_json(Sign::minus()) == "-1");
  CHECK(report::to_json(Sign::plus()) == "+1");
  const json c = report::to_json(fixtures::chi(-2) * CharE::abs_power(1));
  CHECK(c["exponents"]["chi"] == -2);
  CHECK(c["slope"] == "1/2");
  CHECK(report::to_json(CharE())["exponents"].empty());
}

TEST_CASE("packet report of a rank-two parameter") {
  const json r = report::packet_report("phi1", fixtures::phi1_AB());
  CHECK(r["schema"] == "ggp-report/1");
  CHECK(r["size"] == 4);
  CHECK(r["per_side"]["+1"] == 2);
  CHECK(r["per_side"]["-1"] == 2);
  CHECK(r["members"].size() == 4);
  CHECK(r["members"][0]["values"][0]["value"] == "+1");
}

TEST_CASE("zero case report") {
  const LParameter phi = mk_parameter({{fixtures::atom("D", 4, Duality::Minus), 1}}, {}, hermitian(4));
  const GgpSetting s = identified_setting(3, fixtures::chi());
  const MultiplicityReport m = main_multiplicity(fixtures::phi1_AB(), phi, s, EpsilonOracle());
  const json r = report::ggp_report(fixtures::phi1_AB(), phi, s, m, "one");
  CHECK(r["case"] == "Zero");
  CHECK(r["pair"].is_null());
  // Keys come out sorted.
  const std::string text = r.dump();
  CHECK(text.find("\"audit\"") < text.find("\"case\""));
  CHECK(text.find("\"case\"") < text.find("\"schema\""));
}

TEST_CASE("verify report") {
  SuiteConfig config;
  config.seeds = 2;
  config.parities = {1};
  config.backends = {BackendKind::One};
  const PropertyReport result = run_property_suite(config);
  const json r = report::verify_report(config, result);
  CHECK(r["summary"]["all_passed"] == true);
  CHECK(r["summary"]["checks"] == result.checks.size());
  CHECK(r["failures"].empty());
  CHECK(r["config"]["seed"] == 42);
}
