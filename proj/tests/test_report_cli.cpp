#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "falsetheta/report.hpp"
#include "falsetheta/suites.hpp"
#include "json.hpp"

using namespace falsetheta;

namespace {

std::vector<VerificationRecord> strip_timing(std::vector<VerificationRecord> records) {
  for (auto& r : records) r.wall_ms = 0;
  return records;
}

}  // namespace

TEST_CASE("exact sides serialize as coefficient vectors over the joint field") {
  VerificationRecord r;
  set_exact_sides(r, root_power(4, 1), root_power(8, 2));
  CHECK(r.status == RecordStatus::equal);
  CHECK(r.field_order == 8);
  REQUIRE(r.lhs_coeffs.size() == euler_phi(8));
  CHECK(r.lhs_coeffs == r.rhs_coeffs);
  CHECK(r.lhs_coeffs[0] == "0/1");
  CHECK(r.lhs_coeffs[2] == "1/1");

  VerificationRecord s;
  set_exact_sides(s, CyclotomicNumber::one(3), CyclotomicNumber::constant(1, Rational(2)));
  CHECK(s.status == RecordStatus::mismatch);
  CHECK(s.field_order == 3);
  CHECK(s.lhs_coeffs != s.rhs_coeffs);
}

TEST_CASE("json reports carry the summary and full records") {
  SuiteOptions opts;
  opts.suite = "hikami";
  opts.grid.m_values = {2};
  opts.grid.n_values = {1};
  const auto records = run_suite(opts);
  REQUIRE(records.size() == 2);  // closed_form + limit_consistency
  CHECK(all_equal_or_skipped(records));

  const nlohmann::json doc = nlohmann::json::parse(records_to_json(records));
  CHECK(doc.at("format") == "falsetheta-report");
  CHECK(doc.at("summary").at("total") == 2);
  CHECK(doc.at("summary").at("equal") == 2);
  CHECK(doc.at("summary").at("mismatch") == 0);
  const auto& rec = doc.at("records").at(0);
  for (const char* key : {"suite", "identity", "family", "parameters", "status", "lhs", "rhs",
                          "field_order", "lhs_coeffs", "rhs_coeffs", "note", "wall_ms"}) {
    CHECK(rec.contains(key));
  }
  CHECK(rec.at("suite") == "hikami");
  CHECK(rec.at("parameters").at("m") == 2);
  CHECK(rec.at("parameters").at("N") == 1);
  CHECK(rec.at("status") == "equal");
  CHECK(rec.at("field_order").get<long>() > 0);
}

TEST_CASE("the documented record example holds") {
  // First family at m = 3, a = 1, N = 1, M = 1: both sides are 2 zeta_12.
  SuiteOptions opts;
  opts.suite = "hikami";
  opts.grid.m_values = {3};
  opts.grid.a_values = {1};
  opts.grid.n_values = {1};
  const auto records = run_suite(opts);
  REQUIRE(records.size() == 2);
  const VerificationRecord& closed = records[0];
  CHECK(closed.identity == "closed_form");
  CHECK(closed.status == RecordStatus::equal);
  CHECK(closed.field_order == 12);
  CHECK(closed.lhs == closed.rhs);
  REQUIRE(closed.lhs_coeffs.size() == euler_phi(12));
  CHECK(closed.lhs_coeffs[1] == "2/1");  // coefficient of zeta_12
  CHECK(closed.lhs_coeffs[0] == "0/1");
  // The natural-support vs printed-range divergence is called out.
  CHECK(closed.note.find("printed-range") != std::string::npos);
}

TEST_CASE("reports are deterministic modulo timing") {
  SuiteOptions opts;
  opts.suite = "quantum";
  opts.grid.m_values = {2};
  opts.grid.n_values = {1, 3};
  const auto first = strip_timing(run_suite(opts));
  const auto second = strip_timing(run_suite(opts));
  CHECK(records_to_json(first) == records_to_json(second));
  CHECK(records_to_csv(first) == records_to_csv(second));
  CHECK(all_equal_or_skipped(first));
}

TEST_CASE("csv escapes embedded commas and quotes") {
  VerificationRecord r;
  r.suite = "s";
  r.identity = "i";
  r.family = "f";
  r.status = RecordStatus::equal;
  r.note = "a,b \"c\"";
  const std::string csv = records_to_csv({r});
  CHECK(csv.find("\"a,b \"\"c\"\"\"") != std::string::npos);
  CHECK(csv.rfind("suite,identity,family,parameters,status,lhs,rhs,field_order,note,wall_ms\n",
                  0) == 0);
}

TEST_CASE("text reports list mismatches and a closing summary") {
  VerificationRecord good;
  good.suite = "s";
  good.identity = "ok";
  good.status = RecordStatus::equal;
  VerificationRecord bad;
  bad.suite = "s";
  bad.identity = "broken";
  bad.status = RecordStatus::mismatch;
  bad.lhs = "1";
  bad.rhs = "2";
  const std::string text = records_to_text({good, bad});
  CHECK(text.find("[equal] s/ok") != std::string::npos);
  CHECK(text.find("[mismatch] s/broken") != std::string::npos);
  CHECK(text.find("lhs: 1") != std::string::npos);
  CHECK(text.find("2 checks: 1 equal, 1 mismatch, 0 skipped") != std::string::npos);
}

TEST_CASE("the report schema is stable and complete") {
  const std::string schema_text = report_schema();
  CHECK(schema_text == report_schema());
  const nlohmann::json schema = nlohmann::json::parse(schema_text);
  const auto& required = schema.at("properties").at("records").at("items").at("required");
  for (const char* key : {"suite", "parameters", "status", "lhs", "rhs", "field_order"}) {
    bool found = false;
    for (const auto& item : required) found = found || item == key;
    CAPTURE(key);
    CHECK(found);
  }
  // A record missing its status cannot validate: status is required.
  bool status_required = false;
  for (const auto& item : required) status_required = status_required || item == "status";
  CHECK(status_required);
}

TEST_CASE("series previews render compactly") {
  TruncatedQSeries s = TruncatedQSeries::zero(6);
  s.coeffs[0] = Rational(1);
  s.coeffs[1] = Rational(-1);
  s.coeffs[4] = Rational(3, 2);
  CHECK(series_preview(s) == "1 - q + 3/2 q^4 + O(q^7)");
  CHECK(series_preview(TruncatedQSeries::zero(3)) == "0 + O(q^4)");
}

TEST_CASE("suite grids reject out-of-domain selections") {
  SuiteOptions opts;
  opts.suite = "nonsense";
  CHECK_THROWS_AS((void)run_suite(opts), std::invalid_argument);
  opts = SuiteOptions{};
  opts.suite = "example1";
  opts.grid.n_values = {2};
  CHECK_THROWS_AS((void)run_suite(opts), std::invalid_argument);
  opts = SuiteOptions{};
  opts.suite = "hikami";
  opts.grid.a_values = {5};
  CHECK_THROWS_AS((void)run_suite(opts), std::invalid_argument);
}

TEST_CASE("small grids of every suite run green") {
  SuiteOptions opts;
  opts.suite = "example3";
  opts.grid.m_values = {2, 3};
  opts.grid.n_values = {1, 3};
  CHECK(all_equal_or_skipped(run_suite(opts)));

  opts = SuiteOptions{};
  opts.suite = "series";
  opts.grid.m_values = {2};
  CHECK(all_equal_or_skipped(run_suite(opts)));

  opts = SuiteOptions{};
  opts.suite = "bailey";
  opts.grid.m_values = {1};
  opts.pair_order = 30;
  const auto bailey = run_suite(opts);
  CHECK(all_equal_or_skipped(bailey));
  bool saw_control = false;
  for (const auto& r : bailey) saw_control |= r.identity == "erratum_negative_control";
  CHECK(saw_control);

  opts = SuiteOptions{};
  opts.suite = "radial";
  opts.grid.m_values = {2};
  opts.grid.n_values = {1};
  const auto radial = run_suite(opts);
  CHECK(radial.size() == 4);  // one per family
  CHECK(all_equal_or_skipped(radial));
}
