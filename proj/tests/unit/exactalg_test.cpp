#include <gtest/gtest.h>

#include "mechsynth/coeffs.hpp"
#include "mechsynth/ratfunc.hpp"
#include "mechsynth/surd.hpp"
#include "support/random.hpp"

namespace mechsynth {
namespace {

Poly P(std::initializer_list<int> ascending) {
  std::vector<Rat> c;
  for (int v : ascending) c.emplace_back(v);
  return Poly(std::move(c));
}

TEST(Rat, ParsesExactForms) {
  EXPECT_EQ(Rat::parse("3/6"), Rat(mpz_class(1), mpz_class(2)));
  EXPECT_EQ(Rat::parse("-4"), Rat(-4));
  EXPECT_EQ(Rat::parse(" 2/1 "), Rat(2));
  EXPECT_EQ(Rat::parse("0/7").str(), "0");
}

TEST(Rat, RejectsFloatsAndGarbage) {
  for (const char* bad : {"1.5", "1e3", "", "/3", "3/", "3/-4", "abc", "0.5/2"}) {
    try {
      Rat::parse(bad);
      FAIL() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
  try {
    Rat::parse("1/0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDenominator);
  }
}

TEST(Rat, ExactSquareRoot) {
  EXPECT_EQ(Rat::parse("9/4").sqrt(), Rat::parse("3/2"));
  EXPECT_FALSE(Rat(2).sqrt().has_value());
  EXPECT_FALSE(Rat(-4).sqrt().has_value());
}

TEST(Surd, FieldArithmetic) {
  Surd r2 = Surd::sqrt_of(Rat(2));
  EXPECT_EQ(r2 * r2, Surd(2));
  Surd x = Surd(Rat(1)) + r2;
  EXPECT_EQ(x * x.inverse(), Surd(1));
  EXPECT_EQ(x.sign(), 1);
  EXPECT_EQ((Surd(Rat(1)) - r2).sign(), -1);
  EXPECT_EQ((Surd(Rat(3, 2)) - r2).sign(), 1);
  EXPECT_EQ(Surd::sqrt_of(Rat(8, 9)), Surd(Rat(0), Rat(2, 3), mpz_class(2)));
  EXPECT_EQ(Surd::parse("1/2-3*sqrt(5)"), Surd(Rat(1, 2), Rat(-3), mpz_class(5)));
  EXPECT_EQ(Surd::parse(x.str()), x);
  EXPECT_THROW(r2 + Surd::sqrt_of(Rat(3)), Error);
}

TEST(RfNormalize, CommonConstantFactor) {
  RationalFunction r = rf_normalize(P({2, 2}), P({0, 2}));
  EXPECT_EQ(r.num(), P({1, 1}));
  EXPECT_EQ(r.den(), P({0, 1}));
}

TEST(RfNormalize, PolynomialCancellation) {
  RationalFunction r = rf_normalize(P({-1, 0, 1}), P({-1, 1}));
  EXPECT_EQ(r.num(), P({1, 1}));
  EXPECT_EQ(r.den(), P({1}));
}

TEST(RfNormalize, SignAndCancellationAgreeOnSamplePoints) {
  Poly num = P({0, -1});
  Poly den = P({0, -1, -1});
  RationalFunction r = rf_normalize(num, den);
  EXPECT_EQ(r.num(), P({1}));
  EXPECT_EQ(r.den(), P({1, 1}));
  for (int s : {2, 3, 5}) {
    EXPECT_EQ(r.eval(Rat(s)), num.eval(Rat(s)) / den.eval(Rat(s))) << "s=" << s;
  }
}

TEST(RfNormalize, ZeroDenominator) {
  try {
    rf_normalize(P({1}), Poly());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDenominator);
  }
}

TEST(RfArith, Examples) {
  RationalFunction inv_s(P({1}), P({0, 1}));
  RationalFunction s(P({0, 1}));
  EXPECT_EQ(rf_arith(inv_s, s, RfOp::Add), RationalFunction(P({1, 0, 1}), P({0, 1})));
  RationalFunction sp1_over_s(P({1, 1}), P({0, 1}));
  EXPECT_EQ(rf_arith(sp1_over_s, {}, RfOp::Inv), RationalFunction(P({0, 1}), P({1, 1})));
  RationalFunction a(P({1}), P({1, 1}));
  EXPECT_EQ(rf_arith(a, sp1_over_s, RfOp::Mul), inv_s);
  EXPECT_THROW(rf_arith(a, RationalFunction(), RfOp::Div), Error);
  EXPECT_THROW(rf_arith(RationalFunction(), a, RfOp::Inv), Error);
}

TEST(Gcd, SubresultantMatchesEuclid) {
  testing::Gen gen(11);
  for (int i = 0; i < 300; ++i) {
    Poly a = gen.nonzero_poly(4), b = gen.nonzero_poly(4), c = gen.nonzero_poly(3);
    Poly lhs = gcd(a * c, b * c);
    Poly rhs = gcd<Rat>(a * c, b * c);  // generic field Euclid
    EXPECT_EQ(lhs, rhs);
    EXPECT_TRUE(divmod(a * c, lhs).second.is_zero());
    EXPECT_GE(lhs.degree(), c.degree());
  }
}

TEST(RatFuncProperty, FieldAxioms) {
  testing::Gen gen(12);
  auto rf = [&] { return RationalFunction(gen.poly(3), gen.nonzero_poly(3)); };
  for (int i = 0; i < 200; ++i) {
    RationalFunction a = rf(), b = rf(), c = rf();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), RationalFunction(1));
    }
  }
}

TEST(RatFuncProperty, NormalizeCancelsCommonFactor) {
  testing::Gen gen(13);
  for (int i = 0; i < 200; ++i) {
    Poly p = gen.poly(3), q = gen.nonzero_poly(3), r = gen.nonzero_poly(2);
    EXPECT_EQ(rf_normalize(p * r, q * r), rf_normalize(p, q));
  }
}

TEST(ParseRationalFunction, Expressions) {
  RationalFunction y = parse_rational_function("(s^3+2s^2+2s+3)/(s^3+s^2+2s)");
  EXPECT_EQ(y, RationalFunction(P({3, 2, 2, 1}), P({0, 2, 1, 1})));
  EXPECT_EQ(parse_rational_function("1/2*s - 3(s+1)^2"),
            RationalFunction(Poly{Rat(-3), Rat(-11, 2), Rat(-3)}));
  EXPECT_EQ(parse_rational_function(y.str()), y);
  EXPECT_THROW(parse_rational_function("1.5*s"), Error);
  EXPECT_THROW(parse_rational_function("(s+1"), Error);
  EXPECT_THROW(parse_rational_function("1/(s-s)"), Error);
}

TEST(CoeffList, ParseAndPrint) {
  Poly p = parse_coeff_list("[2, 2/1, 1, 1]");
  EXPECT_EQ(p, P({2, 2, 1, 1}));
  EXPECT_EQ(p.str(), "[2, 2, 1, 1]");
  EXPECT_THROW(parse_coeff_list("[1, 0.5]"), Error);
}

TEST(ExtractTheorem5, MonicCoefficients) {
  CoefficientVector cv = extract_theorem5_coeffs(P({2, 2, 1, 1}), P({0, 5, 3, 2, 1}));
  EXPECT_EQ(cv.str(), "(1,1,2,2;2,3,5)");
  // Same values after normalization: numerator and denominator are coprime.
  EXPECT_EQ(extract_theorem5_coeffs(rf_normalize(P({2, 2, 1, 1}), P({0, 5, 3, 2, 1}))), cv);
}

TEST(ExtractTheorem5, ScalesAwayLeadingCoefficient) {
  CoefficientVector cv = extract_theorem5_coeffs(P({0, 0, 0, 2}), P({0, 0, 0, 2, 2}));
  EXPECT_EQ(cv.str(), "(1,0,0,0;1,0,0)");
  EXPECT_EQ(cv.b4, 1);
}

TEST(ExtractTheorem5, ShapeMismatch) {
  try {
    extract_theorem5_coeffs(P({1, 0, 1}), P({0, 1, 0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
  }
  EXPECT_THROW(extract_theorem5_coeffs(P({1}), P({1, 0, 0, 0, 1})), Error);
  EXPECT_THROW(extract_theorem5_coeffs(P({0, 0, 0, 0, 1}), P({0, 0, 0, 0, 1})), Error);
}

TEST(ExtractTheorem5, ReassemblyReproducesInput) {
  testing::Gen gen(14);
  for (int i = 0; i < 100; ++i) {
    Poly num = gen.poly(3);
    Poly den{Rat(0), gen.rat(), gen.rat(), gen.rat(), gen.positive()};
    CoefficientVector cv = extract_theorem5_coeffs(num, den);
    EXPECT_EQ(cv.function(), rf_normalize(num, den));
  }
}

// Admittance of the parallel (inerter, damper, spring) one-port:
// (b s^2 + c s + k1) / s.
RationalFunction first_configuration(const Rat& b, const Rat& c, const Rat& k1) {
  return rf_normalize(Poly{k1, c, b}, Poly{Rat(0), Rat(1)});
}

TEST(ExtractTheorem6, LiteralCoefficients) {
  EXPECT_EQ(extract_theorem6_coeffs(first_configuration(1, 1, 1)).str(), "(0,1,1,1;0,0,1) b4=0");

  // b = c = k1 = k2 = k3 = 1 substituted into the closed-form three-node bridge formula
  // [bc s^3 + b(k1+k2) s^2 + c(k1+k3) s + (k1k2+k2k3+k1k3)] / [s(b s^2 + c s + k2 + k3)].
  RationalFunction fifth = rf_normalize(P({3, 2, 2, 1}), P({0, 2, 1, 1}));
  EXPECT_EQ(extract_theorem6_coeffs(fifth).str(), "(1,2,2,3;1,1,2) b4=0");

  // Same substitution into [b(k1+k2) s^2 + c(k1+k2) s + (...)] / [s(b s^2 + c s + k2 + k3)].
  RationalFunction second = rf_normalize(P({3, 2, 2}), P({0, 2, 1, 1}));
  EXPECT_EQ(extract_theorem6_coeffs(second).str(), "(0,2,2,3;1,1,2) b4=0");

  EXPECT_THROW(extract_theorem6_coeffs(P({1}), P({0, 0, 0, 0, 1})), Error);
  EXPECT_THROW(extract_theorem6_coeffs(P({1}), P({1, 1})), Error);
}

}  // namespace
}  // namespace mechsynth
