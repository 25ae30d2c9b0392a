#include <gtest/gtest.h>

#include <random>

#include "secantlab/arith.hpp"

using namespace secantlab;

TEST(PrimeField, RejectsComposites) {
  EXPECT_THROW(PrimeField(9), NotPrime);
  EXPECT_THROW(PrimeField(2), NotPrime);  // odd primes only
  EXPECT_THROW(PrimeField(1ULL << 31), NotPrime);
  EXPECT_NO_THROW(PrimeField(32003));
  EXPECT_NO_THROW(PrimeField(31013));
  EXPECT_NO_THROW(PrimeField(2147483647));
}

TEST(FieldElement, Inverse) {
  PrimeField f7(7);
  EXPECT_EQ(FieldElement(f7, 3).inv().value(), 5u);
  EXPECT_EQ(FieldElement(f7, 1).inv().value(), 1u);
  EXPECT_THROW(FieldElement(f7, 0).inv(), DivisionByZero);
  PrimeField big(32003);
  EXPECT_THROW(inv(FieldElement(big, 32003)), DivisionByZero);
}

TEST(FieldElement, Operations) {
  PrimeField f7(7);
  EXPECT_EQ((FieldElement(f7, 5) + FieldElement(f7, 4)).value(), 2u);
  EXPECT_EQ((FieldElement(f7, 3) * FieldElement(f7, 5)).value(), 1u);
  EXPECT_EQ((FieldElement(f7, 0) - FieldElement(f7, 1)).value(), 6u);
  EXPECT_EQ(FieldElement(f7, -15).value(), 6u);
}

TEST(FieldElement, MismatchedModuli) {
  PrimeField f7(7), f11(11);
  EXPECT_THROW(FieldElement(f7, 1) + FieldElement(f11, 1), FieldMismatch);
  EXPECT_THROW(FieldElement(f7, 1) * FieldElement(f11, 1), FieldMismatch);
}

TEST(FieldElement, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {7u, 32003u, 2147483647u}) {
    PrimeField F(p);
    std::uniform_int_distribution<std::int64_t> d(0, p - 1);
    for (int it = 0; it < 2000; ++it) {
      FieldElement a(F, d(rng)), b(F, d(rng)), c(F, d(rng));
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (a.value() != 0) EXPECT_EQ((a * a.inv()).value(), 1u);
    }
  }
}

TEST(PrimeField, SquareRoots) {
  for (std::uint32_t p : {7u, 13u, 17u, 32003u, 31013u, 101u}) {
    PrimeField F(p);
    for (Coeff a = 0; a < std::min<Coeff>(p, 500); ++a) {
      auto r = F.sqrt(a);
      bool square = a == 0 || F.pow(a, (p - 1) / 2) == 1;
      ASSERT_EQ(r.has_value(), square) << p << " " << a;
      if (r) EXPECT_EQ(F.mul(*r, *r), a);
    }
  }
}

TEST(Binomial, BoundaryConventions) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(2, 3), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(30, 15), 155117520);
}
