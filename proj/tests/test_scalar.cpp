#include "generators.hpp"

#include <gtest/gtest.h>

using namespace hopfalg;

TEST(Scalar, RationalArithmetic) {
  EXPECT_EQ(Scalar::rational(1, 2) + Scalar::rational(1, 3), Scalar::rational(5, 6));
  EXPECT_EQ(Scalar::rational(-2, -4), Scalar::rational(1, 2));
  EXPECT_EQ(Scalar::rational(3, -6).str(), "-1/2");
  EXPECT_EQ((Scalar::rational(2, 3) * Scalar::rational(9, 4)).str(), "3/2");
  EXPECT_EQ(Scalar::rational(7, 5).inverse(), Scalar::rational(5, 7));
  EXPECT_TRUE((Scalar(4) - Scalar(4)).is_zero());
  EXPECT_THROW(Scalar::rational(1, 0), FieldError);
  EXPECT_THROW(Scalar(0).inverse(), FieldError);
}

TEST(Scalar, SpillsToBigRational) {
  Scalar big(std::int64_t(1) << 62);
  Scalar sq = big * big;  // 2^124 does not fit in 64 bits
  EXPECT_EQ(sq.str(), "21267647932558653966460912964485513216");
  EXPECT_EQ(sq / big, big);
  EXPECT_EQ(sq - sq, Scalar(0));
  EXPECT_TRUE((sq / sq).is_one());
}

TEST(Scalar, Residues) {
  Scalar three = Scalar::residue(3, 7), five = Scalar::residue(5, 7);
  EXPECT_EQ((three * five).str(), "1");
  EXPECT_EQ(three.inverse(), five);
  EXPECT_EQ(Scalar::residue(-1, 7).str(), "6");
  EXPECT_EQ(Scalar::rational(1, 2).to_residue(7).str(), "4");
  EXPECT_EQ(three + Scalar(4), Scalar::residue(0, 7));
  EXPECT_THROW(Scalar::rational(1, 7).to_residue(7), FieldError);
  EXPECT_THROW((void)(Scalar::residue(1, 7) + Scalar::residue(1, 5)), FieldError);
}

TEST(FieldSpec, ParseAndNames) {
  FieldSpec q = FieldSpec::rationals(), f7 = FieldSpec::prime(7);
  EXPECT_EQ(q.parse("-3/4"), Scalar::rational(-3, 4));
  EXPECT_EQ(f7.parse("-3/4").str(), "1");  // -3 * 4^{-1} = -3 * 2 = -6 = 1
  EXPECT_EQ(q.name(), "q");
  EXPECT_EQ(f7.name(), "fp:7");
  EXPECT_EQ(FieldSpec::from_name("fp:7"), f7);
  EXPECT_THROW(FieldSpec::prime(8), FieldError);
  EXPECT_THROW(FieldSpec::from_name("fp:9"), FieldError);
  EXPECT_THROW(FieldSpec::from_name("reals"), FieldError);
  EXPECT_THROW(q.parse("1/0"), FieldError);
  EXPECT_THROW(q.parse("abc"), FieldError);
  EXPECT_THROW(f7.parse("1/14"), FieldError);
}

// Oracle: boost rationals directly, and integer arithmetic mod 7.
TEST(ScalarProperty, MatchesIndependentArithmetic) {
  gen::Rng rng(11);
  for (int it = 0; it < 2000; ++it) {
    std::int64_t an = rng.integer(-1000000, 1000000), ad = rng.integer(1, 1000);
    std::int64_t bn = rng.integer(-1000000, 1000000), bd = rng.integer(1, 1000);
    if (rng.coin(0.1)) an *= std::int64_t(1) << 35;
    Scalar a = Scalar::rational(an, ad), b = Scalar::rational(bn, bd);
    BigRational oa{BigInt(an), BigInt(ad)}, ob{BigInt(bn), BigInt(bd)};
    EXPECT_EQ((a + b).to_big(), oa + ob);
    EXPECT_EQ((a - b).to_big(), oa - ob);
    EXPECT_EQ((a * b).to_big(), oa * ob);
    if (bn != 0) {
      EXPECT_EQ((a / b).to_big(), oa / ob);
    }

    std::int64_t x = rng.integer(0, 6), y = rng.integer(0, 6);
    Scalar rx = Scalar::residue(x, 7), ry = Scalar::residue(y, 7);
    EXPECT_EQ((rx + ry).str(), std::to_string((x + y) % 7));
    EXPECT_EQ((rx * ry).str(), std::to_string((x * y) % 7));
    EXPECT_EQ((rx - ry).str(), std::to_string(((x - y) % 7 + 7) % 7));
  }
}

TEST(ScalarProperty, FieldAxioms) {
  gen::Rng rng(5);
  for (const auto& f : gen::fields())
    for (int it = 0; it < 500; ++it) {
      Scalar a = rng.scalar(f, 0.1), b = rng.scalar(f, 0.1), c = rng.scalar(f, 0.1);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), f.one());
      }
    }
}
