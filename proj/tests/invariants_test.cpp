#include "g2split/invariants.hpp"
#include "g2split/resultant.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace g2split;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

Rational rand_q(std::mt19937_64& rng, long bound = 20) {
  std::uniform_int_distribution<long> n(-bound, bound), d(1, bound);
  return Rational(mpz_class(n(rng)), mpz_class(d(rng)));
}

SexticForm<Rational> rand_sextic(std::mt19937_64& rng) {
  SexticForm<Rational> f;
  for (auto& c : f.a) c = rand_q(rng);
  return f;
}

}  // namespace

TEST(Igusa, KnownValuesOfTheUvFamilyAtOneOne) {
  auto [f, pair] = curve_from_uv(Rational(1), Rational(1));
  auto J = igusa_from_sextic(f);
  EXPECT_EQ(J.J2, Rational(-424));
  EXPECT_EQ(J.J4, Rational(34432));
  EXPECT_EQ(J.J6, Rational(-2895872));
  EXPECT_EQ(J.J10, Rational(1703936));
  auto t = absolute_from_igusa(J);
  EXPECT_EQ(t.i1, q("77472/2809"));
  EXPECT_EQ(t.i2, q("-19951488/148877"));
  EXPECT_EQ(t.i3, q("-25272/418195493"));
}

TEST(Igusa, J10IsTheDiscriminant) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto f = rand_sextic(rng);
    if (f.a[6].is_zero()) continue;
    EXPECT_EQ(igusa_from_sextic(f).J10, sextic_discriminant(f));
  }
}

TEST(Igusa, DoubleRootGivesZeroJ10) {
  // (X - 1)^2 (X^4 + X + 3), ascending.
  SexticForm<Rational> f;
  std::vector<Rational> a = {Rational(3), Rational(-5), Rational(1), Rational(1), Rational(1), Rational(-2), Rational(1)};
  std::copy(a.begin(), a.end(), f.a.begin());
  EXPECT_TRUE(igusa_from_sextic(f).J10.is_zero());
}

TEST(Igusa, AbsoluteInvariantsAreGL2Invariant) {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int i = 0; i < 30 && checked < 10; ++i) {
    auto f = rand_sextic(rng);
    Rational a = rand_q(rng), b = rand_q(rng), c = rand_q(rng), d = rand_q(rng);
    if ((a * d - b * c).is_zero()) continue;
    try {
      auto before = absolute_invariants(f);
      auto after = absolute_invariants(transform_sextic(f, a, b, c, d));
      EXPECT_EQ(before, after);
      ++checked;
    } catch (const Undefined&) {
    }
  }
  EXPECT_GE(checked, 5);
}

TEST(Igusa, J2VanishingIsRejected) {
  IgusaInvariants<Rational> zero{Rational(0), Rational(1), Rational(1), Rational(1)};
  try {
    absolute_from_igusa(zero);
    FAIL() << "expected Undefined";
  } catch (const Undefined& e) {
    EXPECT_EQ(e.kind(), "J2Vanishes");
  }
}

TEST(Igusa, WorksOverQuadraticAndFiniteFields) {
  auto u = QuadExt::parse("-15/8+35/8*sqrt(5)"), v = QuadExt::parse("25/2+35/6*sqrt(5)");
  auto t = absolute_invariants(curve_from_uv(u, v).first);
  EXPECT_TRUE(t.i1.is_rational());
  EXPECT_EQ(t.i1.a(), Rational(81));
  PrimeField::Domain p{10007};
  auto tp = absolute_invariants(curve_from_uv(PrimeField::from_int(p, 1), PrimeField::from_int(p, 1)).first);
  EXPECT_EQ(tp.i1, PrimeField::from_rational(p, q("77472/2809")));
}

TEST(CubicPair, KnownValuesAtOneOne) {
  auto pair = curve_from_uv(Rational(1), Rational(1)).second;
  auto inv = pair_invariants(pair);
  EXPECT_EQ(inv.H, q("10/3"));
  EXPECT_EQ(inv.r1, q("-3375/2"));
  EXPECT_EQ(inv.r2, q("405000/13"));
  EXPECT_EQ(inv.r3, q("-25/954"));
  EXPECT_EQ(resultant_value(univariate(std::vector<Rational>(pair.f.begin(), pair.f.end())),
                            univariate(std::vector<Rational>(pair.g.begin(), pair.g.end())), "X"),
            Rational(16));
}

TEST(CubicPair, HIsAntisymmetric) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    CubicPair<Rational> p, swapped;
    for (std::size_t k = 0; k < 4; ++k) {
      p.f[k] = rand_q(rng);
      p.g[k] = rand_q(rng);
    }
    swapped.f = p.g;
    swapped.g = p.f;
    EXPECT_EQ(pair_H(p), -pair_H(swapped));
    EXPECT_TRUE(pair_H(CubicPair<Rational>{p.f, p.f}).is_zero());
  }
}

TEST(CubicPair, LambdaConstantsAreConstantOverTheFamily) {
  std::mt19937_64 rng(41);
  int seen = 0;
  for (int i = 0; i < 60 && seen < 30; ++i) {
    Rational u = rand_q(rng), v = rand_q(rng);
    if (v.is_zero()) continue;
    auto pair = curve_from_uv(u, v).second;
    try {
      auto [r1, r2] = pair_r1_r2(pair);
      Rational h = pair_H(pair);
      auto F = univariate(std::vector<Rational>(pair.f.begin(), pair.f.end()));
      auto G = univariate(std::vector<Rational>(pair.g.begin(), pair.g.end()));
      if (!r1.is_zero()) EXPECT_EQ(h * h * h / (resultant_value(F, G, "X") * r1), kLambdaR);
      if (!r2.is_zero()) {
        EXPECT_EQ(h * h * h * h / (discriminant_value(F, "X") * discriminant_value(G, "X") * r2), kLambdaD);
      }
      ++seen;
    } catch (const Undefined&) {
    }
  }
  EXPECT_GE(seen, 20);
}

TEST(CubicPair, CommonRootIsRejected) {
  // F = G share every root.
  CubicPair<Rational> p{{Rational(1), Rational(2), Rational(3), Rational(1)}, {Rational(1), Rational(2), Rational(3), Rational(1)}};
  try {
    pair_r1_r2(p);
    FAIL() << "expected Undefined";
  } catch (const Undefined& e) {
    EXPECT_EQ(e.kind(), "ResultantVanishes");
  }
}

TEST(CurveFromUv, RejectsVZero) {
  try {
    curve_from_uv(Rational(1), Rational(0));
    FAIL() << "expected Undefined";
  } catch (const Undefined& e) {
    EXPECT_EQ(e.kind(), "DegenerateParameters");
  }
}

TEST(CurveFromUv, SexticIsTheProductOfThePair) {
  auto [f, pair] = curve_from_uv(q("3/2"), q("-2"));
  auto prod = pair_product(pair);
  EXPECT_EQ(prod.a, f.a);
}
