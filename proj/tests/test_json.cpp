#include <gtest/gtest.h>

#include "amlab/amlab.hpp"
#include "amlab/json.hpp"

using namespace amlab;

namespace {

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

}  // namespace

TEST(Json, EnvelopeKeyOrder) {
  const Json e = envelope("count", Json{{"p", 3}, {"k", 1}}, Json{{"count", 6}}, true);
  EXPECT_EQ(keys(e), (std::vector<std::string>{"schema", "command", "params", "passed", "result"}));
  EXPECT_EQ(e["schema"], "amlab/1");
  EXPECT_EQ(keys(e["params"]), (std::vector<std::string>{"p", "k"}));
  EXPECT_EQ(e.dump(), R"({"schema":"amlab/1","command":"count","params":{"p":3,"k":1},"passed":true,"result":{"count":6}})");
}

TEST(Json, TheoremReportIsDeterministic) {
  const std::string a = envelope("verify-theorem", Json{{"p", 3}}, to_json(run_all(3)), true).dump(2);
  const std::string b = envelope("verify-theorem", Json{{"p", 3}}, to_json(run_all(3)), true).dump(2);
  EXPECT_EQ(a, b);
  const Json j = Json::parse(a);
  EXPECT_EQ(j["result"]["checks"].size(), 15u);
  EXPECT_EQ(j["result"]["checks"][0]["name"], "group_presentation");
  EXPECT_EQ(keys(j["result"]["checks"][0]).at(0), "name");
}

TEST(Json, BigIntegersAreDecimalStrings) {
  const auto z = fit_l_polynomial(count_sequence(AMCurve::make(3), 4), 3, 4);
  const Json j = to_json(z);
  ASSERT_TRUE(j["L_coefficients"].is_array());
  EXPECT_TRUE(j["L_coefficients"][0].is_string());
  EXPECT_EQ(j["L_coefficients"][8], "81");
  EXPECT_EQ(j["counts"][0], "6");
}

TEST(Json, CoverReportFields) {
  const Json j = to_json(analyze_cover(ASCover{parse_rational(make_field(5, 1), "2x + 1/x")}));
  EXPECT_EQ(j["genus"]["value"], 4);
  EXPECT_EQ(j["genus"]["formula"], "rh");
  EXPECT_EQ(j["p_rank"]["formula"], "ds");
  EXPECT_EQ(j["ramified"].size(), 2u);
  EXPECT_EQ(j["ramified"][0]["filtration_orders"], Json::parse("[5,5,1]"));
  EXPECT_EQ(j["different_degree"], 16);
}
