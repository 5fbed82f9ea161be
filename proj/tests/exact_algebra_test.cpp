#include "g2split/polytext.hpp"
#include "g2split/ratfunc.hpp"
#include "g2split/resultant.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace g2split;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

Rational rand_q(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> n(-30, 30), d(1, 12);
  return Rational(mpz_class(n(rng)), mpz_class(d(rng)));
}

QPoly rand_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int terms) {
  std::vector<QPoly::Term> t;
  std::uniform_int_distribution<int> e(0, 3);
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (std::size_t k = 0; k < vars.size(); ++k) m.e[k] = static_cast<std::uint16_t>(e(rng));
    t.emplace_back(m, rand_q(rng));
  }
  return QPoly::from_terms(vars, {}, std::move(t));
}

}  // namespace

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(q("6/4"), q("3/2"));
  EXPECT_EQ(q("-0.25"), q("-1/4"));
  EXPECT_EQ(q(" 7 ").str(), "7");
  EXPECT_EQ(q("-3/6").str(), "-1/2");
}

TEST(Rational, RejectsMalformedInput) {
  EXPECT_THROW(q("1/0"), ParseError);
  EXPECT_THROW(q("abc"), ParseError);
  EXPECT_THROW(q(""), ParseError);
  EXPECT_THROW(q("1/2/3"), ParseError);
}

TEST(Rational, InverseOfZeroThrows) { EXPECT_THROW(Rational(0).inverse(), Error); }

TEST(Rational, RingAxiomsOnRandomValues) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Rational a = rand_q(rng), b = rand_q(rng), c = rand_q(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
  }
}

TEST(Rational, SquareRoots) {
  Rational r;
  EXPECT_TRUE(rational_sqrt(q("49/4"), r));
  EXPECT_EQ(r, q("7/2"));
  EXPECT_FALSE(rational_sqrt(q("2"), r));
  EXPECT_FALSE(rational_sqrt(q("-4"), r));
}

TEST(QuadExt, ParseAndArithmetic) {
  QuadExt a = QuadExt::parse("27-77/2*sqrt(-1)");
  EXPECT_EQ(a.d(), -1);
  EXPECT_EQ(a.a(), Rational(27));
  EXPECT_EQ(a.b(), q("-77/2"));
  QuadExt i = QuadExt::sqrt_of(-1);
  EXPECT_EQ(i * i, QuadExt::from_int({-1}, -1));
  QuadExt s = QuadExt::sqrt_of(6);
  EXPECT_EQ((s * s).a(), Rational(6));
}

TEST(QuadExt, NormIsMultiplicative) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    QuadExt a(rand_q(rng), rand_q(rng), 5), b(rand_q(rng), rand_q(rng), 5);
    EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
  }
}

TEST(QuadExt, MixingRadicandsIsDomainMismatch) {
  EXPECT_THROW(QuadExt::sqrt_of(5) + QuadExt::sqrt_of(-1), DomainMismatch);
}

TEST(PrimeField, ArithmeticAndInverse) {
  PrimeField::Domain dom{10007};
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    PrimeField a = PrimeField::random(dom, rng);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), PrimeField::from_int(dom, 1));
  }
  EXPECT_EQ(PrimeField::from_rational(dom, q("1/2")) * PrimeField::from_int(dom, 2), PrimeField::from_int(dom, 1));
  EXPECT_THROW(PrimeField::from_rational({5}, q("1/5")), DenominatorNotUnit);
  EXPECT_THROW(PrimeField(1, 12), InvalidArgument);
  EXPECT_THROW(PrimeField(1, 5) + PrimeField(1, 7), DomainMismatch);
}

TEST(ExtField, FrobeniusAndInverse) {
  for (unsigned k = 1; k <= 4; ++k) {
    ExtFieldElement::Domain dom{ExtField::create(5, k)};
    std::mt19937_64 rng(k);
    for (int i = 0; i < 50; ++i) {
      auto a = ExtFieldElement::random(dom, rng);
      EXPECT_EQ(a.pow(dom.field->order()), a);
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), ExtFieldElement::from_int(dom, 1));
    }
  }
}

TEST(MultiPoly, ProductRule) {
  std::mt19937_64 rng(17);
  const std::vector<std::string> xy = {"x", "y"};
  for (int i = 0; i < 20; ++i) {
    QPoly f = rand_poly(rng, xy, 5), g = rand_poly(rng, xy, 5);
    EXPECT_EQ((f * g).derivative("x"), f.derivative("x") * g + f * g.derivative("x"));
  }
}

TEST(MultiPoly, EvaluationIsAHomomorphism) {
  std::mt19937_64 rng(19);
  const std::vector<std::string> xy = {"x", "y"};
  for (int i = 0; i < 20; ++i) {
    QPoly f = rand_poly(rng, xy, 6), g = rand_poly(rng, xy, 6);
    std::vector<Rational> pt{rand_q(rng), rand_q(rng)};
    EXPECT_EQ((f * g).evaluate(pt), f.evaluate(pt) * g.evaluate(pt));
    EXPECT_EQ((f - g).evaluate(pt), f.evaluate(pt) - g.evaluate(pt));
    EXPECT_EQ(f.pow(3).evaluate(pt), f.evaluate(pt).pow(3));
  }
}

TEST(MultiPoly, UnboundVariableIsReported) {
  QPoly f = parse_infix("x + y");
  EXPECT_THROW(f.evaluate(std::map<std::string, Rational>{{"x", Rational(1)}}), InvalidArgument);
}

TEST(MultiPoly, ReductionModPCommutesWithArithmetic) {
  std::mt19937_64 rng(23);
  const std::vector<std::string> xy = {"x", "y"};
  for (int i = 0; i < 20; ++i) {
    QPoly f = rand_poly(rng, xy, 5), g = rand_poly(rng, xy, 5);
    EXPECT_EQ(reduce_mod_p(f * g, 10007), reduce_mod_p(f, 10007) * reduce_mod_p(g, 10007));
    EXPECT_EQ(reduce_mod_p(f + g, 10007), reduce_mod_p(f, 10007) + reduce_mod_p(g, 10007));
  }
}

TEST(Resultant, SymmetryAndKnownValues) {
  QPoly f = parse_infix("X^3 - 2*X + 1"), g = parse_infix("X^2 + 3*X - 5");
  Rational fg = resultant_value(f, g, "X"), gf = resultant_value(g, f, "X");
  EXPECT_EQ(fg, gf * Rational(-1).pow(3 * 2));
  // Common root 1: resultant zero.
  EXPECT_TRUE(resultant_value(parse_infix("X^2 - 1"), parse_infix("X^2 - 3*X + 2"), "X").is_zero());
  EXPECT_EQ(discriminant_value(parse_infix("X^2 + 3*X + 1"), "X"), Rational(5));
  EXPECT_EQ(discriminant_value(parse_infix("X^3 + 2*X + 1"), "X"), Rational(-4 * 8 - 27));
}

TEST(Resultant, MultiplicativeInFirstArgument) {
  QPoly f1 = parse_infix("X^2 + X + 2"), f2 = parse_infix("2*X - 3"), g = parse_infix("X^3 - X + 7");
  EXPECT_EQ(resultant_value(f1 * f2, g, "X"), resultant_value(f1, g, "X") * resultant_value(f2, g, "X"));
}

TEST(Resultant, SymbolicCoefficients) {
  QPoly f = parse_infix("X^2 + a*X + b", {"X", "a", "b"});
  QPoly d = discriminant(f, "X");
  EXPECT_EQ(d, parse_infix("a^2 - 4*b", d.vars()));
}

TEST(Resultant, RejectsDegenerateInput) {
  QPoly zero(std::vector<std::string>{"X"}, {});
  EXPECT_THROW(resultant(zero, parse_infix("X + 1"), "X"), InvalidArgument);
  EXPECT_THROW(discriminant(parse_infix("X + 1"), "X"), InvalidArgument);
}

TEST(RationalFunction, SubstituteAndCompare) {
  using QRF = RationalFunction<Rational>;
  QRF a(parse_infix("x^2 - 1", {"x"}), parse_infix("x - 1", {"x"}));
  QRF b(parse_infix("x + 1", {"x"}));
  EXPECT_TRUE(a == b);
  EXPECT_THROW(a.evaluate(std::vector<Rational>{Rational(1)}), DenominatorVanishes);
}

TEST(PolyText, RoundTripIsIdentity) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    QPoly f = rand_poly(rng, {"x", "y", "z"}, 8);
    std::string text = to_text(f);
    QPoly back = from_text<Rational>(text, {});
    EXPECT_EQ(back, f);
    EXPECT_EQ(to_text(back), text);
  }
  auto fp = reduce_mod_p(parse_infix("3*x^2 - y/2"), 7);
  EXPECT_EQ(from_text<PrimeField>(to_text(fp), {7}), fp);
}

TEST(PolyText, ZeroPolynomialAndErrors) {
  QPoly zero(std::vector<std::string>{"x"}, {});
  EXPECT_EQ(to_text(zero), "QQ: x\n0");
  EXPECT_EQ(from_text<Rational>("QQ: x\n0", {}), zero);
  EXPECT_THROW(from_text<Rational>("QQ: x\n1:1,1", {}), ParseError);
  EXPECT_THROW(from_text<Rational>("GF(5): x\n1:1", {}), DomainMismatch);
  EXPECT_THROW(from_text<Rational>("no header", {}), ParseError);
}

TEST(PolyText, InfixParser) {
  QPoly f = parse_infix("(x + 2*y)^2 - 4*x*y / 2");
  EXPECT_EQ(f, parse_infix("x^2 + 2*x*y + 4*y^2"));
  EXPECT_THROW(parse_infix("x / y"), ParseError);
  EXPECT_THROW(parse_infix("(x + 1"), ParseError);
  EXPECT_EQ(to_infix(parse_infix("x^2 - 1/2*y")), "x^2 - 1/2*y");
}
