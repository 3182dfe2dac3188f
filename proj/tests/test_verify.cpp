#include <doctest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "jtype/error.hpp"
#include "jtype/verify.hpp"

using namespace jtype;

TEST_CASE("samples are reproducible and independent of the thread count") {
  auto params = PerazzoParams::make(2, 4);
  VerifyOptions o;
  o.samples = 40;
  o.seed = 9;
  o.threads = 1;
  auto one = verify_full_perazzo(params, Field::default_field(), o);
  o.threads = 3;
  auto three = verify_full_perazzo(params, Field::default_field(), o);
  CHECK(report_to_json(one) == report_to_json(three));
  o.seed = 10;
  auto other = verify_full_perazzo(params, Field::default_field(), o);
  CHECK(report_to_json(one) != report_to_json(other));
  CHECK(one.summary.total == 5 * 40);
}

TEST_CASE("structured streams respect their coefficient patterns") {
  auto params = PerazzoParams::make(3, 3);
  Field f = Field::default_field();
  auto vars = full_perazzo_form(params, f).vars();
  for (std::size_t i = 0; i < 50; ++i) {
    auto c1 = classify_linear_form(draw_linear_form(vars, params, f, SampleOrigin::case_i, 3, i), params);
    CHECK(c1.tag == CaseTag::case_i);
    CHECK(c1.literal_match);
    auto n1 = classify_linear_form(draw_linear_form(vars, params, f, SampleOrigin::case_i_nonliteral, 3, i), params);
    CHECK(n1.tag == CaseTag::case_i);
    CHECK_FALSE(n1.literal_match);
    CHECK(classify_linear_form(draw_linear_form(vars, params, f, SampleOrigin::case_ii, 3, i), params).tag ==
          CaseTag::case_ii);
    CHECK(classify_linear_form(draw_linear_form(vars, params, f, SampleOrigin::case_iii, 3, i), params).tag ==
          CaseTag::case_iii);
    CHECK(draw_linear_form(vars, params, f, SampleOrigin::uniform, 3, i).to_string() ==
          draw_linear_form(vars, params, f, SampleOrigin::uniform, 3, i).to_string());
  }
}

TEST_CASE("small sampled run matches every literal prediction") {
  VerifyOptions o;
  o.samples = 60;
  auto r = verify_full_perazzo(PerazzoParams::make(2, 3), Field::default_field(), o);
  CHECK(r.summary.mismatches == 0);
  CHECK(r.summary.oracle_disagreements == 0);
  CHECK(r.summary.top_power_rule_violations == 0);
  CHECK(r.summary.strong_lefschetz_never);
  CHECK(r.summary.maximum_is_case_ii);
  CHECK(r.summary.passed());
}

TEST_CASE("enumeration over GF(7) sees the four chain types") {
  VerifyOptions o;
  o.mode = VerifyMode::enumerate;
  o.threads = 0;
  o.keep_samples = false;
  auto r = verify_full_perazzo(PerazzoParams::make(2, 3), Field::prime(7), o);
  CHECK(r.candidate_count == 2801);
  CHECK(r.summary.total == r.candidate_count);
  REQUIRE(r.summary.observed.size() == 4);
  CHECK(r.summary.observed[0].partition.to_string() == "(2^3,1^6)");
  CHECK(r.summary.observed[1].partition.to_string() == "(2^4,1^4)");
  CHECK(r.summary.observed[2].partition.to_string() == "(3^2,2^2,1^2)");
  CHECK(r.summary.observed[3].partition.to_string() == "(4,2^3,1^2)");
  CHECK(r.summary.chain_consistent);
  CHECK(r.summary.case_iii_within_bounds);
  CHECK(r.summary.oracle_disagreements == 0);
  // the top power rule explains every type; the literal rule does not
  CHECK(r.summary.top_power_rule_violations == 0);
  CHECK(r.summary.mismatches > 0);
  CHECK_FALSE(r.summary.passed());
  CHECK(r.samples.empty());
}

TEST_CASE("enumeration cap") {
  VerifyOptions o;
  o.mode = VerifyMode::enumerate;
  o.enumeration_cap = 1000;
  CHECK_THROWS_AS(verify_full_perazzo(PerazzoParams::make(2, 3), Field::prime(7), o), Error);
  CHECK_THROWS_AS(verify_full_perazzo(PerazzoParams::make(2, 3), Field::rationals(), o), Error);
}

TEST_CASE("report JSON layout") {
  VerifyOptions o;
  o.samples = 3;
  auto r = verify_full_perazzo(PerazzoParams::make(2, 3), Field::rationals(), o);
  auto j = nlohmann::json::parse(report_to_json(r));
  CHECK(j["version"] == 1);
  CHECK(j["field"] == "q");
  CHECK(j["samples"].size() == 15);
  CHECK(j["summary"]["mismatches"] == 0);
  CHECK(j["hilbert"]["notation"] == "(1,5,5,1)");
}
