#include "g2split/singular.hpp"
#include "g2split/suite.hpp"

#include <gtest/gtest.h>

using namespace g2split;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

}  // namespace

TEST(Gradient, ListedSingularPointIsExactlySingular) {
  const auto& cat = SurfaceCatalog::instance();
  auto g = gradient(cat.S2, std::array<Rational, 3>{Rational(0), q("729/50"), q("729/12800000")});
  EXPECT_TRUE(g.value.is_zero());
  for (const auto& d : g.gradient) EXPECT_TRUE(d.is_zero());
  EXPECT_TRUE(g.is_singular);
}

TEST(Gradient, GenericPointIsNotSingular) {
  const auto& cat = SurfaceCatalog::instance();
  auto g = gradient(cat.S2, std::array<Rational, 3>{Rational(1), Rational(2), Rational(3)});
  EXPECT_FALSE(g.is_singular);
}

TEST(ZFromXy, LiftAndRejection) {
  EXPECT_EQ(z_from_xy(Rational(0), q("729/50")), q("729/12800000"));
  try {
    z_from_xy(q("81/20"), q("-729/200"));
    FAIL();
  } catch (const Undefined& e) {
    EXPECT_EQ(e.kind(), "Phi2Vanishes");
  }
}

TEST(Classify, TableGroups) {
  auto d4 = classify_automorphism(std::array<Rational, 3>{q("-8019/20"), q("-1240029/200"), q("-531441/100000")});
  EXPECT_EQ(d4.group, AutGroup::D4);
  auto d6 = classify_automorphism(std::array<Rational, 3>{Rational(81), q("-5103/25"), q("-729/12500")});
  EXPECT_EQ(d6.group, AutGroup::D6);
  auto generic = classify_automorphism(std::array<Rational, 3>{Rational(1), Rational(2), Rational(3)});
  EXPECT_EQ(generic.group, AutGroup::Generic);
  EXPECT_FALSE(generic.c1.is_zero());
  EXPECT_FALSE(generic.c2.is_zero());
}

TEST(Classify, ScaleConsistentOverExtensions) {
  QuadExt::Domain dom{5};
  auto e = [&](const char* s) { return QuadExt::from_rational(dom, q(s)); };
  auto c = classify_automorphism(std::array<QuadExt, 3>{e("81"), e("-5103/25"), e("-729/12500")});
  EXPECT_EQ(c.group, AutGroup::D6);
}

TEST(Numeric, AgreesWithExactAtTheListedPoint) {
  const auto& cat = SurfaceCatalog::instance();
  auto r = numeric_gradient(cat.S2, {"0", "729/50", "729/12800000"}, 60);
  EXPECT_TRUE(r.is_singular);
  auto off = numeric_gradient(cat.S2, {"1", "2", "3"}, 60);
  EXPECT_FALSE(off.is_singular);
  EXPECT_THROW(numeric_gradient(cat.S2, {"1", "2", "3"}, 20), InvalidArgument);
}

TEST(Minors, VanishOnIso1) {
  auto r = verify_minors_on_iso1(10007, 25);
  EXPECT_EQ(r.at("status"), "pass") << r.dump();
  EXPECT_EQ(r.at("curve_points"), 25);
}

TEST(Minors, OtherPrimeAlsoWorks) {
  auto r = verify_minors_on_iso1(1009, 10, 5);
  EXPECT_EQ(r.at("status"), "pass");
}

TEST(Minors, InsufficientPointsIsAnError) {
  try {
    verify_minors_on_iso1(7, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientPoints);
  }
  EXPECT_THROW(verify_minors_on_iso1(10, 5), InvalidArgument);
}

TEST(Minors, VanishAtCorrectedTablePoints) {
  auto report = verify_exceptional_table();
  for (const auto& row : report.at("corrected")) {
    for (const auto& pt : row.at("points")) EXPECT_TRUE(pt.at("minors_vanish").get<bool>()) << pt.dump();
  }
}

TEST(C3System, ResidualsAndClaims) {
  auto r = verify_c3_system();
  EXPECT_EQ(r.at("status"), "discrepancy");
  EXPECT_TRUE(r.at("only_first_lift_on_surface").get<bool>());
  const auto& first = r.at("details").at(0);
  EXPECT_EQ(first.at("cubic"), "-944784");
  EXPECT_FALSE(first.at("satisfies_cubic").get<bool>());
  EXPECT_TRUE(first.at("lift").at("is_singular").get<bool>());
  EXPECT_EQ(r.at("details").at(1).at("lift"), "Phi2Vanishes");
}

TEST(T3Points, PairingAndGroups) {
  auto r = verify_t3_points();
  EXPECT_EQ(r.at("status"), "discrepancy");
  EXPECT_TRUE(r.at("system_satisfied").get<bool>());
  EXPECT_TRUE(r.at("bijective").get<bool>());
  EXPECT_TRUE(r.at("on_S2").get<bool>());
  EXPECT_TRUE(r.at("group_multiset_ok").get<bool>());
  EXPECT_EQ(r.at("pairing"), (std::vector<int>{0, 1, 2}));
}

TEST(ExceptionalTable, CorrectedTableReproducesAndVerbatimDoesNot) {
  auto r = verify_exceptional_table();
  EXPECT_EQ(r.at("corrected_points_not_reproduced"), 0);
  EXPECT_GT(r.at("verbatim_points_not_reproduced").get<int>(), 0);
  EXPECT_TRUE(r.at("degenerate_row_ok").get<bool>());
  EXPECT_EQ(r.at("i3_sign").at("resolution"), "t3 list is correct");
}

TEST(Suite, ReportShapeAndUnknownId) {
  auto report = run_suite({"t3_points", "c3_system"});
  EXPECT_EQ(report.at("checks").size(), 2u);
  for (const auto& c : report.at("checks")) {
    for (const char* key : {"id", "status", "method", "runtime_ms", "details"}) EXPECT_TRUE(c.contains(key)) << key;
  }
  EXPECT_NE(report.at("overall"), "fail");
  EXPECT_THROW(run_check("nosuch"), InvalidArgument);
}
