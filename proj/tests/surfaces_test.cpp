#include "g2split/surfaces.hpp"

#include <gtest/gtest.h>

using namespace g2split;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

template <class Fn>
std::string undefined_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Undefined& e) {
    return e.kind();
  }
  return "";
}

}  // namespace

TEST(Catalog, TranscriptionsParse) {
  const auto& cat = SurfaceCatalog::instance();
  EXPECT_EQ(cat.S2.vars(), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(cat.S3mod5.num_terms(), 146u);
  EXPECT_EQ(cat.S3mod5.total_degree(), 20u);
  EXPECT_EQ(cat.iso1.vars(), (std::vector<std::string>{"u", "v"}));
  for (const auto& name : cat.poly_names()) EXPECT_NO_THROW(cat.poly(name)) << name;
  EXPECT_THROW(cat.poly("S7"), InvalidArgument);
}

TEST(Theta, TableValues) {
  auto t = theta(q("25/2"), q("250/9"));
  EXPECT_EQ(t.i1, q("-8019/20"));
  EXPECT_EQ(t.i2, q("-1240029/200"));
  EXPECT_EQ(t.i3, q("-531441/100000"));
  auto one = theta(Rational(1), Rational(1));
  EXPECT_EQ(one.i1, q("77472/2809"));
}

TEST(Theta, ConjugatePointsGiveTheSameRationalTriple) {
  auto a = theta(QuadExt::parse("27-77/2*sqrt(-1)"), QuadExt::parse("23+77/9*sqrt(-1)"));
  auto b = theta(QuadExt::parse("27+77/2*sqrt(-1)"), QuadExt::parse("23-77/9*sqrt(-1)"));
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.i1.is_rational());
  EXPECT_EQ(a.i1.a(), q("729/2116"));
}

TEST(Theta, RejectionLoci) {
  EXPECT_EQ(undefined_kind([] { theta(Rational(1), Rational(0)); }), "ThetaUndefined");
  // theta itself is defined at the degenerate row; only the genus 2 variant rejects it.
  EXPECT_EQ(undefined_kind([] { theta(q("-7/2"), q("2")); }), "");
  try {
    theta_genus2(q("-7/2"), q("2"));
    FAIL() << "expected Undefined";
  } catch (const Undefined& e) {
    EXPECT_EQ(e.kind(), "NoGenus2Field");
    EXPECT_NE(std::string(e.what()).find("no associated genus 2 field (J10=0)"), std::string::npos);
  }
}

TEST(Theta, QuadraticDenominatorFactorIsNamed) {
  // theta_quadratic at v = 27: 4u^2 - 72u + 324 = 4(u - 9)^2.
  try {
    theta(Rational(9), Rational(27));
    FAIL() << "expected Undefined";
  } catch (const Undefined& e) {
    EXPECT_EQ(e.kind(), "ThetaUndefined");
    EXPECT_NE(std::string(e.what()).find("J2 = 0"), std::string::npos);
  }
}

TEST(UvToR, ValuesAndRejection) {
  auto [r1, r2] = uv_to_r(Rational(1), Rational(1));
  EXPECT_EQ(r1, q("-3375/2"));
  EXPECT_EQ(r2, q("405000/13"));
  EXPECT_EQ(undefined_kind([] { uv_to_r(Rational(1), Rational(27)); }), "EqRUndefined");
}

TEST(Rho, T3Point) {
  auto t = rho(q("2/243"), q("1/11664"));
  EXPECT_EQ(t.i1, Rational(81));
  EXPECT_EQ(t.i2, q("-5103/25"));
  EXPECT_EQ(t.i3, q("-729/12500"));
  EXPECT_EQ(undefined_kind([] { rho(Rational(0), Rational(1)); }), "RhoUndefined");
}

TEST(Rho, ChartMapFactorsTheta) {
  auto [r1, r2] = uv_to_r(q("25/2"), q("250/9"));
  auto [c1, c2] = to_rho_chart(r1, r2);
  EXPECT_EQ(c1, q("-512/2187"));
  EXPECT_EQ(c2, q("-256/6561"));
  EXPECT_EQ(rho(c1, c2), theta(q("25/2"), q("250/9")));
}

TEST(J2Locus, RootInQSqrt6) {
  const auto& cat = SurfaceCatalog::instance();
  QuadExt::Domain dom{6};
  std::vector<QuadExt> pt{QuadExt::parse("-48+24*sqrt(6)"), QuadExt::from_int(dom, 1)};
  EXPECT_TRUE(evaluate_in(cat.J2locus, pt, dom).is_zero());
  EXPECT_FALSE(cat.J2locus.evaluate(std::vector<Rational>{Rational(96), Rational(8)}).is_zero());
}

TEST(SurfaceEval, S2OracleFamily) {
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      SexticForm<Rational> f{{Rational(1), Rational(0), Rational(b), Rational(0), Rational(a), Rational(0), Rational(1)}};
      if (sextic_discriminant(f).is_zero()) continue;
      try {
        auto t = absolute_invariants(f);
        EXPECT_TRUE(surface_eval<Rational>("S2", {t.i1, t.i2, t.i3}).is_zero()) << a << " " << b;
      } catch (const Undefined&) {
      }
    }
  }
}

TEST(SurfaceEval, S3mod5NeedsCharacteristicFive) {
  EXPECT_THROW(surface_eval<Rational>("S3mod5", {Rational(1), Rational(2), Rational(3)}), DomainMismatch);
  EXPECT_THROW(surface_eval<PrimeField>("S3mod5", {PrimeField(1, 7), PrimeField(2, 7), PrimeField(3, 7)}),
               DomainMismatch);
  EXPECT_NO_THROW(surface_eval<PrimeField>("S3mod5", {PrimeField(1, 5), PrimeField(2, 5), PrimeField(3, 5)}));
  EXPECT_THROW(surface_eval<Rational>("S2", {Rational(1)}), InvalidArgument);
}

TEST(SurfaceEval, S3mod5VanishesOnThetaOverGF25) {
  ExtFieldElement::Domain dom{ExtField::create(5, 2)};
  std::mt19937_64 rng(9);
  int used = 0;
  for (int i = 0; i < 100 && used < 10; ++i) {
    auto u = ExtFieldElement::random(dom, rng), v = ExtFieldElement::random(dom, rng);
    try {
      auto t = theta(u, v);
      EXPECT_TRUE(surface_eval<ExtFieldElement>("S3mod5", {t.i1, t.i2, t.i3}).is_zero());
      ++used;
    } catch (const Undefined&) {
    }
  }
  EXPECT_EQ(used, 10);
}

TEST(Identities, FastIdentitiesPass) {
  IdentityOptions opt{2, 30, false};
  for (const char* id : {"theta_consistency", "eqr_consistency", "rho_factors_theta", "s2_oracle_membership"}) {
    auto r = check_identity(id, opt);
    EXPECT_EQ(r.at("status"), "pass") << r.dump();
  }
}

TEST(Identities, SameSeedSameReport) {
  IdentityOptions opt{7, 20, false};
  auto a = check_identity("theta_consistency", opt), b = check_identity("theta_consistency", opt);
  a.erase("runtime_ms");
  b.erase("runtime_ms");
  EXPECT_EQ(a, b);
}

TEST(Identities, UnknownIdListsValidOnes) {
  try {
    check_identity("nosuch");
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("theta_consistency"), std::string::npos);
  }
}

TEST(Sample, GridCountsAndSkips) {
  auto r = sample_surface("s3_via_theta", Rational(-2), Rational(2), Rational(1), Rational(-2), Rational(2), Rational(1));
  EXPECT_EQ(r.rows.size() + r.skipped.size(), 25u);
  EXPECT_GE(r.skipped.size(), 5u);  // the v = 0 column
  auto empty = sample_surface("s2_via_oracle", Rational(1), Rational(0), Rational(1), Rational(0), Rational(1), Rational(1));
  EXPECT_TRUE(empty.rows.empty());
  EXPECT_THROW(sample_surface("s9", Rational(0), Rational(1), Rational(1), Rational(0), Rational(1), Rational(1)),
               InvalidArgument);
  EXPECT_THROW(sample_surface("s3_via_theta", Rational(0), Rational(1), Rational(0), Rational(0), Rational(1), Rational(1)),
               InvalidArgument);
}

TEST(Sample, OracleRowsLieOnS2) {
  auto r = sample_surface("s2_via_oracle", Rational(-3), Rational(3), q("1/2"), Rational(-3), Rational(3), q("1/2"));
  EXPECT_GT(r.rows.size(), 100u);
  EXPECT_EQ(r.max_relative_residual, 0.0);
}
