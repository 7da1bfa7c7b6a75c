#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bcn/report.hpp>

#include <json.hpp>

using namespace bcn;
using nlohmann::json;

namespace {

Report sample_report(double wall) {
  Report r("unit");
  r.config_integer("n", 2);
  r.config_number("mu", 0.21);
  r.config_text("mode", "verify");
  VecR lam(2);
  lam << 3.0, 1.5;
  r.config_real_vector("lambda", lam);
  CheckResult ok;
  ok.name = "alpha";
  ok.passed = true;
  ok.max_error = 1.5e-12;
  ok.tolerance = 1e-9;
  ok.metrics.push_back({"condition_number", 42.0});
  r.add_check(ok);
  CheckResult bad;
  bad.name = "beta";
  bad.passed = false;
  bad.max_error = 0.25;
  bad.tolerance = 1e-9;
  r.add_check(bad);
  MatC M(1, 2);
  M << Complex(1.0, -2.0), Complex(0.0, 3.0);
  r.add_matrix("probe", M);
  r.set_wall_seconds(wall);
  return r;
}

}  // namespace

TEST_CASE("overall status is the conjunction of the checks") {
  Report r("unit");
  CheckResult a;
  a.name = "a";
  a.passed = true;
  r.add_check(a);
  CHECK(r.all_passed());
  CheckResult b;
  b.name = "b";
  b.passed = false;
  r.add_check(b);
  CHECK_FALSE(r.all_passed());
}

TEST_CASE("JSON document structure") {
  json doc = json::parse(sample_report(1.25).to_json_string());
  CHECK(doc.at("schema").get<std::string>() == "bcnlab-report/1");
  CHECK(doc.at("overall").get<std::string>() == "fail");
  CHECK(doc.at("config").at("n").get<int>() == 2);
  CHECK(doc.at("config").at("lambda").size() == 2);
  auto& checks = doc.at("checks");
  REQUIRE(checks.size() == 2);
  CHECK(checks[0].at("name") == "alpha");
  CHECK(checks[0].at("status").get<std::string>() == "pass");
  CHECK(checks[0].at("metrics").at("condition_number").get<double>() == 42.0);
  // Matrices are row-major [re, im] pairs with explicit shape.
  auto& probe = doc.at("matrices").at("probe");
  CHECK(probe.at("rows").get<int>() == 1);
  CHECK(probe.at("cols").get<int>() == 2);
  auto& entries = probe.at("entries");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0][0].get<double>() == 1.0);
  CHECK(entries[0][1].get<double>() == -2.0);
  CHECK(entries[1][0].get<double>() == 0.0);
  CHECK(entries[1][1].get<double>() == 3.0);
  CHECK(doc.at("timing").at("wall_seconds").get<double>() == 1.25);
}

TEST_CASE("timing can be excluded for byte-identity comparisons") {
  std::string a = sample_report(1.0).to_json_string(false);
  std::string b = sample_report(2.0).to_json_string(false);
  CHECK(a == b);
  std::string at = sample_report(1.0).to_json_string(true);
  std::string bt = sample_report(2.0).to_json_string(true);
  CHECK(at != bt);
}

TEST_CASE("text rendering carries the verdict lines") {
  std::string text = sample_report(0.5).to_text();
  CHECK(text.find("[PASS] alpha") != std::string::npos);
  CHECK(text.find("[FAIL] beta") != std::string::npos);
  CHECK(text.find("overall: FAIL") != std::string::npos);
}

TEST_CASE("identical construction gives byte-identical bodies") {
  // Full determinism guarantee used by the command-line determinism test.
  CHECK(sample_report(3.0).to_json_string(false) ==
        sample_report(4.0).to_json_string(false));
  CHECK(sample_report(3.0).to_text() == sample_report(4.0).to_text());
}
