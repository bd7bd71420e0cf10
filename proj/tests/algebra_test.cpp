#include "ntil/algebra/cubic_field.hpp"
#include "ntil/algebra/polynomial.hpp"
#include "ntil/algebra/rational.hpp"
#include "ntil/algebra/sturm.hpp"

#include <gtest/gtest.h>

#include <random>

namespace ntil {
namespace {

const RatPoly kMinpoly({Rational(7), Rational(19), Rational(-331), Rational(401)});
const RootInterval kPaperInterval{Rational(2115883, 10000000), Rational(2115884, 10000000)};

Rational random_rational(std::mt19937_64& rng, int range = 50) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  return Rational(num(rng), den(rng));
}

FieldElem random_elem(std::mt19937_64& rng) {
  auto f = certificate_field();
  return f->element(random_rational(rng), random_rational(rng), random_rational(rng));
}

TEST(RationalTest, ParseAndFormat) {
  EXPECT_EQ(parse_rational("36/5"), Rational(36, 5));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("4/2"), Rational(2));
  EXPECT_EQ(to_string(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("3/-4"), std::invalid_argument);
}

TEST(RationalTest, DecimalRoundsHalfToEven) {
  EXPECT_EQ(to_decimal(Rational(36, 5), 3), "7.200");
  EXPECT_EQ(to_decimal(Rational(32, 3), 3), "10.667");
  EXPECT_EQ(to_decimal(Rational(1, 8), 2), "0.12");
  EXPECT_EQ(to_decimal(Rational(3, 8), 2), "0.38");
  EXPECT_EQ(to_decimal(Rational(-1, 8), 2), "-0.12");
  EXPECT_EQ(to_decimal(Rational(5, 2), 0), "2");
  EXPECT_EQ(to_decimal(Rational(1, 1000), 2), "0.00");
  EXPECT_EQ(to_decimal(Rational(-1, 1000), 2), "0.00");
  EXPECT_EQ(floor(Rational(-7, 2)), BigInt(-4));
  EXPECT_EQ(floor(Rational(7, 2)), BigInt(3));
}

TEST(RationalTest, ArithmeticIsExact) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> big(-1000000000L, 1000000000L), pos(1, 1000000000L);
  for (int i = 0; i < 200; ++i) {
    const BigInt a = big(rng), b = pos(rng), c = big(rng), d = pos(rng);
    const Rational sum = Rational(a, b) + Rational(c, d);
    EXPECT_EQ(sum * Rational(d) * Rational(b), Rational(a * d + c * b));
    EXPECT_EQ(parse_rational(to_string(sum)), sum);
  }
}

TEST(SturmTest, PaperIntervalIsolatesOneRoot) {
  EXPECT_EQ(sturm_count(kMinpoly, kPaperInterval.lo, kPaperInterval.hi), 1);
}

TEST(SturmTest, SimpleCounts) {
  EXPECT_EQ(sturm_count(RatPoly({Rational(-2), Rational(0), Rational(1)}), 1, 2), 1);
  EXPECT_EQ(sturm_count(RatPoly({Rational(1), Rational(0), Rational(1)}), -10, 10), 0);
  // (x-1)^2 (x-3): distinct roots only.
  const RatPoly sq = RatPoly({Rational(-1), Rational(1)}).pow(2) * RatPoly({Rational(-3), Rational(1)});
  EXPECT_EQ(sturm_count(sq, 0, 4), 2);
  EXPECT_EQ(real_root_count(kMinpoly), 3);
}

TEST(SturmTest, EndpointRootIsRejected) {
  const RatPoly q({Rational(-1), Rational(1)});
  try {
    sturm_count(q, 1, 2);
    FAIL() << "expected EndpointRootError";
  } catch (const EndpointRootError& e) {
    EXPECT_NE(std::string(e.what()).find("lower endpoint 1"), std::string::npos);
  }
  EXPECT_THROW(sturm_count(q, 0, 1), EndpointRootError);
}

TEST(SturmTest, CountsAreAdditiveOverPartitions) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    RatPoly f = RatPoly::constant(1);
    for (int k = 0; k < 4; ++k) f = f * RatPoly({random_rational(rng, 9), Rational(1)});
    Rational a = -11, b = Rational(1, 3), c = 12;
    for (Rational* t : {&a, &b, &c})
      while (f(*t) == 0) *t += Rational(1, 7);
    EXPECT_EQ(sturm_count(f, a, b) + sturm_count(f, b, c), sturm_count(f, a, c));
  }
}

TEST(SturmTest, IsolationOrdersRoots) {
  const auto roots = isolate_real_roots(kMinpoly);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_LT(roots[0].hi, roots[1].lo + Rational(1, 1000000));
  for (const auto& iv : roots) EXPECT_EQ(sturm_count(kMinpoly, iv.lo, iv.hi), 1);
}

TEST(RefineTest, Sqrt2) {
  const RatPoly f({Rational(-2), Rational(0), Rational(1)});
  const auto iv = refine_root(f, {1, 2}, Rational(1, 100));
  EXPECT_LE(iv.width(), Rational(1, 100));
  EXPECT_LT(iv.lo * iv.lo, 2);
  EXPECT_GT(iv.hi * iv.hi, 2);
}

TEST(RefineTest, RationalRootAtMidpoint) {
  const RatPoly f({Rational(-1, 2), Rational(1)});
  const auto iv = refine_root(f, {0, 1}, Rational(1, 4));
  EXPECT_LE(iv.width(), Rational(1, 4));
  EXPECT_LT(iv.lo, Rational(1, 2));
  EXPECT_GT(iv.hi, Rational(1, 2));
}

TEST(RefineTest, CertificateRootToFifteenDigits) {
  // Independent oracle: 60-digit Newton iteration, frozen.
  // p = 0.211588301563095774726753417778899566244742766036114280100791
  const Rational oracle_lo = parse_rational("211588301563095774726753417778/1000000000000000000000000000000");
  const Rational oracle_hi = parse_rational("211588301563095774726753417779/1000000000000000000000000000000");
  const auto iv = refine_root(kMinpoly, kPaperInterval, pow10(-15));
  EXPECT_LE(iv.width(), pow10(-15));
  EXPECT_LT(iv.lo, oracle_lo);
  EXPECT_GT(iv.hi, oracle_hi);
  EXPECT_LE(kPaperInterval.lo, iv.lo);
  EXPECT_GE(kPaperInterval.hi, iv.hi);
}

TEST(RefineTest, NeverLosesTheRoot) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const RatPoly f = RatPoly({random_rational(rng, 20), Rational(1)}) * RatPoly({random_rational(rng, 20), Rational(1)}) *
                      RatPoly({Rational(1), Rational(0), Rational(1)});
    for (const auto& iv : isolate_real_roots(f)) {
      if (f(iv.lo).sign() == f(iv.hi).sign()) continue;  // double root
      const auto r = refine_root(f, iv, Rational(1, 1000));
      EXPECT_NE(f(r.lo).sign(), f(r.hi).sign());
      EXPECT_EQ(sturm_count(f, r.lo, r.hi), 1);
    }
  }
}

TEST(CubicFieldTest, RejectsReducibleOrBadInterval) {
  EXPECT_THROW(CubicField::create(RatPoly({Rational(-1), Rational(0), Rational(0), Rational(1)}), {0, 2}),
               std::invalid_argument);
  EXPECT_THROW(CubicField::create(kMinpoly, {-1, 1}), std::invalid_argument);
}

TEST(CubicFieldTest, Multiplication) {
  auto f = certificate_field();
  const FieldElem p = f->generator();
  EXPECT_EQ(p * p, f->element(0, 0, 1));
  EXPECT_EQ(p * (p * p), f->element(Rational(-7, 401), Rational(-19, 401), Rational(331, 401)));
  std::mt19937_64 rng(1);
  const FieldElem one = f->element(1);
  for (int i = 0; i < 10; ++i) {
    const auto x = random_elem(rng);
    EXPECT_EQ(one * x, x);
  }
}

TEST(CubicFieldTest, Signs) {
  auto f = certificate_field();
  const FieldElem p = f->generator();
  EXPECT_EQ(field_sign(p), Sign::positive);
  EXPECT_EQ(field_sign(evaluate(kMinpoly, p)), Sign::zero);
  EXPECT_TRUE(evaluate(kMinpoly, p).is_zero());
  EXPECT_EQ(field_sign(p - Rational(2115883, 10000000)), Sign::positive);
  EXPECT_EQ(field_sign(p - Rational(2115884, 10000000)), Sign::negative);
  // Tight comparison forcing refinement: p - 0.21158830156309577 > 0.
  EXPECT_EQ(field_sign(p - parse_rational("21158830156309577/100000000000000000")), Sign::positive);
  EXPECT_EQ(field_sign(p - parse_rational("21158830156309578/100000000000000000")), Sign::negative);
  EXPECT_EQ(p.decimal(15), "0.211588301563096");
}

TEST(CubicFieldTest, Inverse) {
  auto f = certificate_field();
  EXPECT_EQ(field_inverse(f->element(1)), f->element(1));
  EXPECT_EQ(field_inverse(f->element(2)), f->element(Rational(1, 2)));
  const FieldElem p = f->generator();
  EXPECT_EQ(p * field_inverse(p), f->element(1));
  EXPECT_THROW(field_inverse(f->element(0)), std::domain_error);
}

TEST(CubicFieldTest, InverseProperty) {
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 100) {
    const auto x = random_elem(rng);
    if (x.is_zero()) continue;
    EXPECT_EQ(x * x.inverse(), x.field()->element(1));
    ++checked;
  }
}

TEST(CubicFieldTest, SignIsMultiplicative) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_elem(rng), b = random_elem(rng);
    EXPECT_EQ(field_sign(a * b), field_sign(a) * field_sign(b));
  }
}

TEST(CubicFieldTest, SignAgreesWithHighPrecisionEvaluation) {
  std::mt19937_64 rng(13);
  const Rational p_approx = parse_rational("211588301563095774726753417778899566/1000000000000000000000000000000000000");
  for (int i = 0; i < 50; ++i) {
    const auto x = random_elem(rng);
    const Rational v = x.c0() + p_approx * (x.c1() + p_approx * x.c2());
    if (abs(v) < pow10(-25)) continue;
    EXPECT_EQ(static_cast<int>(field_sign(x)), v.sign());
  }
}

}  // namespace
}  // namespace ntil
