#include "doctest.h"

#include "glie/field.hpp"

using namespace glie;

TEST_CASE("prime field construction guards") {
  CHECK_NOTHROW(FieldSpec::prime(2));
  CHECK_NOTHROW(FieldSpec::prime(97));
  CHECK_THROWS_AS(FieldSpec::prime(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::prime(4), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::prime(91), std::invalid_argument);  // 7*13
  CHECK_THROWS_AS(FieldSpec::prime(101), std::invalid_argument);
}

TEST_CASE("residue arithmetic against brute force") {
  for (std::int64_t p : {2, 3, 5, 7, 97}) {
    FieldSpec f = FieldSpec::prime(p);
    for (std::int64_t a = 0; a < p; ++a) {
      Scalar sa = f.from_int(a);
      CHECK(f.add(sa, f.neg(sa)).is_zero());
      if (a != 0) {
        // a * a^{-1} = 1
        CHECK(f.mul(sa, f.inv(sa)) == f.one());
      }
      for (std::int64_t b = 0; b < p; ++b) {
        Scalar sb = f.from_int(b);
        CHECK(f.add(sa, sb).residue_value() == (a + b) % p);
        CHECK(f.mul(sa, sb).residue_value() == (a * b) % p);
        CHECK(f.sub(sa, sb).residue_value() == ((a - b) % p + p) % p);
      }
    }
  }
}

TEST_CASE("negative integers reduce into [0,p)") {
  FieldSpec f = FieldSpec::prime(5);
  CHECK(f.from_int(-1).residue_value() == 4);
  CHECK(f.from_int(-7).residue_value() == 3);
  CHECK(f.from_int(10).residue_value() == 0);
}

TEST_CASE("rational arithmetic is exact and canonical") {
  FieldSpec q = FieldSpec::rational();
  Scalar half = q.parse("1/2");
  Scalar third = q.parse("1/3");
  CHECK(q.add(half, third) == q.parse("5/6"));
  CHECK(q.mul(half, third) == q.parse("1/6"));
  CHECK(q.sub(third, half) == q.parse("-1/6"));
  CHECK(q.div(half, third) == q.parse("3/2"));
  CHECK(q.inv(q.parse("-2/3")) == q.parse("-3/2"));

  // canonicalization: lowest terms, positive denominator
  CHECK(q.parse("2/4") == half);
  CHECK(q.parse("-1/-2") == half);
  CHECK(q.parse("1/-2") == q.parse("-1/2"));
  CHECK(q.parse("0/7") == q.zero());

  // no overflow: numbers far beyond 64 bits
  Scalar big = q.parse("123456789012345678901234567890");
  Scalar prod = q.mul(big, big);
  CHECK(q.div(prod, big) == big);
  CHECK(prod.str() == "15241578753238836750495351562536198787501905199875019052100");
}

TEST_CASE("scalar text forms") {
  FieldSpec f5 = FieldSpec::prime(5);
  CHECK(f5.from_int(3).str() == "3");
  CHECK_THROWS_AS(f5.parse("5"), std::invalid_argument);
  CHECK_THROWS_AS(f5.parse("-1"), std::invalid_argument);
  CHECK_THROWS_AS(f5.parse("x"), std::invalid_argument);
  CHECK(f5.parse("4") == f5.from_int(4));

  FieldSpec q = FieldSpec::rational();
  CHECK(q.parse("7").str() == "7");
  CHECK(q.parse("-6/4").str() == "-3/2");
  CHECK(q.parse(q.parse("22/7").str()) == q.parse("22/7"));
}

TEST_CASE("scalar ordering") {
  FieldSpec f5 = FieldSpec::prime(5);
  CHECK(scalar_cmp(f5.from_int(2), f5.from_int(3)) < 0);
  CHECK(scalar_cmp(f5.from_int(3), f5.from_int(3)) == 0);
  FieldSpec q = FieldSpec::rational();
  CHECK(scalar_cmp(q.parse("1/3"), q.parse("1/2")) < 0);
  CHECK(scalar_cmp(q.parse("-1"), q.zero()) < 0);
}
