#include "g2split/g2split.h"

#include <gtest/gtest.h>
#include <json.hpp>

#include <string>

using nlohmann::json;

namespace {

class CApi : public ::testing::Test {
 protected:
  void SetUp() override { ASSERT_EQ(g2s_session_new(&s), G2S_OK); }
  void TearDown() override { g2s_session_free(s); }

  json take(char* p) {
    json j = json::parse(p);
    g2s_string_free(p);
    return j;
  }

  g2s_session* s = nullptr;
};

}  // namespace

TEST_F(CApi, ThetaAndUndefined) {
  char* out = nullptr;
  ASSERT_EQ(g2s_theta(s, "25/2", "250/9", nullptr, &out), G2S_OK);
  auto j = take(out);
  EXPECT_EQ(j["i1"], "-8019/20");
  EXPECT_EQ(g2s_theta(s, "-7/2", "2", nullptr, &out), G2S_UNDEFINED);
  EXPECT_STREQ(g2s_last_error_kind(s), "NoGenus2Field");
  EXPECT_NE(std::string(g2s_last_error(s)).find("no associated genus 2 field (J10=0)"), std::string::npos);
}

TEST_F(CApi, QuadraticInputIsInferred) {
  char* out = nullptr;
  ASSERT_EQ(g2s_theta(s, "-15/8+35/8*sqrt(5)", "25/2+35/6*sqrt(5)", nullptr, &out), G2S_OK);
  auto j = take(out);
  EXPECT_EQ(j["field"], "QQ(sqrt(5))");
  EXPECT_EQ(j["i1"], "81");
}

TEST_F(CApi, ParseErrorsCarryStatus) {
  const char* sextic[7] = {"1", "1/0", "0", "0", "0", "0", "1"};
  char* out = nullptr;
  EXPECT_EQ(g2s_invariants(s, sextic, nullptr, &out), G2S_PARSE_ERROR);
  EXPECT_NE(std::string(g2s_last_error(s)).find("position"), std::string::npos);
  EXPECT_EQ(g2s_theta(s, "1", "1", "GF(6)", &out), G2S_INVALID_ARGUMENT);
}

TEST_F(CApi, InvariantsFlagJ2Vanishing) {
  // Every invariant of x^6 is zero.
  const char* sextic[7] = {"0", "0", "0", "0", "0", "0", "1"};
  char* out = nullptr;
  ASSERT_EQ(g2s_invariants(s, sextic, nullptr, &out), G2S_OK);
  auto j = take(out);
  EXPECT_EQ(j["flag"], "J2Vanishes");
  EXPECT_TRUE(j["i1"].is_null());
  EXPECT_TRUE(j["J10_vanishes"].get<bool>());
}

TEST_F(CApi, SurfaceEvalOverFiniteFields) {
  const char* pt[3] = {"1", "2", "3"};
  char* out = nullptr;
  ASSERT_EQ(g2s_surface_eval(s, "S3mod5", pt, 3, "GF(5)", &out), G2S_OK);
  take(out);
  EXPECT_EQ(g2s_surface_eval(s, "S3mod5", pt, 3, nullptr, &out), G2S_DOMAIN_MISMATCH);
  const char* ext[3] = {"[1,2]", "[0,1]", "3"};
  ASSERT_EQ(g2s_surface_eval(s, "S3mod5", ext, 3, "GF(5^2)", &out), G2S_OK);
  EXPECT_EQ(take(out)["field"], "GF(5^2)");
}

TEST_F(CApi, SingularAndClassify) {
  const char* pt[3] = {"0", "729/50", "729/12800000"};
  char* out = nullptr;
  ASSERT_EQ(g2s_singular(s, "S2", pt, 0, nullptr, &out), G2S_OK);
  EXPECT_TRUE(take(out)["is_singular"].get<bool>());
  ASSERT_EQ(g2s_singular(s, "S2", pt, 1, nullptr, &out), G2S_OK);
  EXPECT_TRUE(take(out)["is_singular"].get<bool>());
  ASSERT_EQ(g2s_classify(s, pt, nullptr, &out), G2S_OK);
  EXPECT_EQ(take(out)["group"], "D4");
}

TEST_F(CApi, SettersValidate) {
  EXPECT_EQ(g2s_set_precision(s, 10), G2S_INVALID_ARGUMENT);
  EXPECT_EQ(g2s_set_prime(s, 10006), G2S_INVALID_ARGUMENT);
  EXPECT_EQ(g2s_set_prime(s, 1009), G2S_OK);
  EXPECT_EQ(g2s_theta(nullptr, "1", "1", nullptr, nullptr), G2S_INVALID_ARGUMENT);
}

TEST_F(CApi, VerifySingleCheck) {
  char* out = nullptr;
  int failed = -1;
  ASSERT_EQ(g2s_verify(s, "t3_points", &out, &failed), G2S_OK);
  auto j = take(out);
  EXPECT_EQ(failed, 0);
  EXPECT_EQ(j["checks"][0]["status"], "discrepancy");
  EXPECT_EQ(g2s_verify(s, "nosuch", &out, &failed), G2S_INVALID_ARGUMENT);
  EXPECT_NE(std::string(g2s_last_error(s)).find("c3_system"), std::string::npos);
}

TEST_F(CApi, SampleEmptyGridHasHeader) {
  char* csv = nullptr;
  ASSERT_EQ(g2s_sample(s, "s3_via_theta", "1", "0", "1", "0", "1", "1", &csv, nullptr), G2S_OK);
  EXPECT_STREQ(csv, "i1,i2,i3,param1,param2\n");
  g2s_string_free(csv);
}

TEST_F(CApi, PolynomialRoundTrip) {
  g2s_poly* p = nullptr;
  ASSERT_EQ(g2s_poly_from_catalog(s, "S2", &p), G2S_OK);
  char* text = nullptr;
  ASSERT_EQ(g2s_poly_to_text(s, p, &text), G2S_OK);
  g2s_poly* back = nullptr;
  ASSERT_EQ(g2s_poly_parse(s, text, &back), G2S_OK);
  char* again = nullptr;
  ASSERT_EQ(g2s_poly_to_text(s, back, &again), G2S_OK);
  EXPECT_STREQ(text, again);
  const char* pt[3] = {"0", "729/50", "729/12800000"};
  char* value = nullptr;
  ASSERT_EQ(g2s_poly_eval(s, back, pt, 3, &value), G2S_OK);
  EXPECT_STREQ(value, "0");
  g2s_string_free(value);
  g2s_string_free(text);
  g2s_string_free(again);
  g2s_poly_free(back);

  g2s_poly* mod = nullptr;
  ASSERT_EQ(g2s_poly_reduce_mod_p(s, p, 7, &mod), G2S_OK);
  ASSERT_EQ(g2s_poly_to_text(s, mod, &text), G2S_OK);
  EXPECT_EQ(std::string(text).rfind("GF(7):", 0), 0u);
  ASSERT_EQ(g2s_poly_parse(s, text, &back), G2S_OK);
  g2s_string_free(text);
  g2s_poly_free(back);
  g2s_poly_free(mod);
  g2s_poly_free(p);

  EXPECT_EQ(g2s_poly_parse(s, "QQ: x\n1:1,1", &back), G2S_PARSE_ERROR);
  EXPECT_EQ(g2s_poly_from_catalog(s, "nosuch", &back), G2S_INVALID_ARGUMENT);
}
