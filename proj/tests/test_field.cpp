#include <doctest.h>

#include "leibniz/rng.hpp"
#include "test_util.hpp"

using namespace leibniz;
using testutil::fp;
using testutil::frac;
using testutil::q;
using testutil::sc;

TEST_CASE("field spec accepts primes only") {
  CHECK(fp(2).p == 2);
  CHECK(fp(2147483647).p == 2147483647);  // the cap itself is prime
  CHECK_THROWS_AS(FieldSpec::prime(1), Error);
  CHECK_THROWS_AS(FieldSpec::prime(4), Error);
  CHECK_THROWS_AS(FieldSpec::prime(91), Error);  // 7 * 13
  CHECK_THROWS_AS(FieldSpec::prime(2147483649LL), Error);
  CHECK(q() == q());
  CHECK(!(q() == fp(5)));
  CHECK(!(fp(3) == fp(5)));
}

TEST_CASE("parsing normalizes") {
  CHECK(scalar_parse("3/6", q()) == frac(1, 2));
  CHECK(scalar_parse("-2/4", q()) == frac(-1, 2));
  CHECK(scalar_parse("7", fp(5)) == sc(fp(5), 2));
  CHECK(scalar_parse("0/7", q()).is_zero());
  CHECK(scalar_parse("10", fp(5)).is_zero());

  CHECK_THROWS_AS(scalar_parse("1/0", q()), Error);
  CHECK_THROWS_AS(scalar_parse("1/2", fp(5)), Error);
  CHECK_THROWS_AS(scalar_parse("-1", fp(5)), Error);
  CHECK_THROWS_AS(scalar_parse("", q()), Error);
  CHECK_THROWS_AS(scalar_parse("x", q()), Error);
  CHECK_THROWS_AS(scalar_parse("1.5", q()), Error);
  CHECK_THROWS_AS(scalar_parse("1/", q()), Error);
  CHECK_THROWS_AS(scalar_parse("/2", q()), Error);
  CHECK_THROWS_AS(scalar_parse("3-4", q()), Error);
}

TEST_CASE("arithmetic matches hand values") {
  CHECK(frac(1, 2) + frac(1, 3) == frac(5, 6));
  CHECK(frac(1, 2) - frac(1, 2) == Scalar::zero(q()));
  CHECK(frac(2, 3) * frac(3, 4) == frac(1, 2));
  CHECK(frac(1, 2) / frac(1, 4) == sc(q(), 2));
  CHECK(-frac(1, 2) == frac(-1, 2));
  CHECK(inv(sc(fp(5), 2)) == sc(fp(5), 3));
  CHECK(sc(fp(7), 5) + sc(fp(7), 4) == sc(fp(7), 2));
  CHECK(sc(fp(7), 2) - sc(fp(7), 5) == sc(fp(7), 4));
  CHECK(-sc(fp(7), 3) == sc(fp(7), 4));
  CHECK((Scalar::zero(fp(3)) * sc(fp(3), 2)).is_zero());

  CHECK_THROWS_AS(inv(Scalar::zero(q())), Error);
  CHECK_THROWS_AS(frac(1, 2) / Scalar::zero(q()), Error);
  CHECK_THROWS_AS(sc(q(), 1) + sc(fp(5), 1), Error);
}

TEST_CASE("field axioms hold on random triples") {
  for (const FieldSpec& f : {q(), fp(2), fp(5), fp(101)}) {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      Scalar a = rng.scalar(f), b = rng.scalar(f), c = rng.scalar(f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + Scalar::zero(f) == a);
      CHECK(a * Scalar::one(f) == a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK((a * inv(a)).is_one());
    }
  }
}

TEST_CASE("format then parse is the identity") {
  for (const FieldSpec& f : {q(), fp(2), fp(13)}) {
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      Scalar a = rng.scalar(f);
      if (f.is_rationals() && trial % 3 == 0) a = a / rng.nonzero_scalar(f);  // exercise fractions
      CHECK(scalar_parse(scalar_format(a), f) == a);
    }
  }
  CHECK(scalar_format(frac(-1, 2)) == "-1/2");
  CHECK(scalar_format(sc(q(), 3)) == "3");
  CHECK(scalar_format(sc(fp(5), 7)) == "2");
}
