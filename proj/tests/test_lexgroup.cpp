#include <doctest.h>

#include "oag/lexgroup.hpp"
#include "oracles.hpp"

using namespace oag;
using oag::testing::elem2;

TEST_CASE("addition is coordinatewise") {
  CHECK(elem2(Rational(1, 2), Rational(3)) + elem2(Rational(0), Rational(-1)) ==
        elem2(Rational(1, 2), Rational(2)));
  GroupElement x = elem2(Rational(5, 7), Rational(-2));
  CHECK(x + GroupElement::zero(2) == x);
  CHECK(elem2(Rational(0), Rational(1)) + elem2(Rational(0), Rational(2)) ==
        elem2(Rational(0), Rational(3)));
}

TEST_CASE("comparison is lexicographic") {
  CHECK(cmp(elem2(Rational(0), Rational(100)), elem2(Rational(1), Rational(-100))) == Cmp::LT);
  CHECK(cmp(elem2(Rational(1), Rational(2)), elem2(Rational(1), Rational(2))) == Cmp::EQ);
  CHECK(cmp(elem2(Rational(2), Rational(0)), elem2(Rational(1), Rational(9))) == Cmp::GT);
}

TEST_CASE("scalar multiplication") {
  CHECK(scalar_mul(Rational(3, 2), elem2(Rational(0), Rational(2))) ==
        elem2(Rational(0), Rational(3)));
  CHECK(scalar_mul(Rational(0), elem2(Rational(4), Rational(9))) == GroupElement::zero(2));
  CHECK(scalar_mul(Rational(-1), elem2(Rational(0), Rational(1))) ==
        elem2(Rational(0), Rational(-1)));
}

TEST_CASE("archimedean classes") {
  CHECK(arch_class(elem2(Rational(0), Rational(3))).leading == 1);
  CHECK(arch_class(elem2(Rational(1), Rational(-5))).leading == 0);
  // Same class: each bounded by a multiple of the other.
  GroupElement a = elem2(Rational(0), Rational(3));
  GroupElement b = elem2(Rational(0), Rational(7, 2));
  CHECK(arch_class(a) == arch_class(b));
  CHECK(a * Rational(2) > b);
  CHECK(b * Rational(2) > a);
  CHECK_THROWS_AS(arch_class(GroupElement::zero(2)), NonPositive);
}

TEST_CASE("arch_ll examples") {
  CHECK(arch_ll(elem2(Rational(0), Rational(3)), elem2(Rational(1), Rational(0))));
  CHECK_FALSE(arch_ll(elem2(Rational(0), Rational(3)), elem2(Rational(0), Rational(100))));
  CHECK_FALSE(arch_ll(elem2(Rational(1), Rational(0)), elem2(Rational(0), Rational(3))));
}

TEST_CASE("rational ratio") {
  CHECK(rational_ratio(elem2(Rational(0), Rational(2)), elem2(Rational(0), Rational(3))) ==
        Rational(3, 2));
  CHECK_THROWS_AS(
      rational_ratio(elem2(Rational(0), Rational(2)), elem2(Rational(1), Rational(0))),
      NotRationallyDependent);
  GroupElement x = elem2(Rational(3), Rational(-7, 3));
  CHECK(rational_ratio(x, x) == Rational(1));
}

TEST_CASE("ordered group law on random triples") {
  testing::Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    GroupElement x = elem2(testing::rand_rational(rng, 20, 8), testing::rand_rational(rng, 20, 8));
    GroupElement y = elem2(testing::rand_rational(rng, 20, 8), testing::rand_rational(rng, 20, 8));
    GroupElement z = elem2(testing::rand_rational(rng, 20, 8), testing::rand_rational(rng, 20, 8));
    if (x < y) CHECK(x + z < y + z);
  }
}

TEST_CASE("arch_class stable under positive multiples") {
  testing::Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    GroupElement x = elem2(testing::rand_rational(rng, 5, 4), testing::rand_rational(rng, 5, 4));
    if (!(x > GroupElement::zero(2))) continue;
    for (int n = 1; n <= 100; n += 13) CHECK(arch_class(x * Rational(n)) == arch_class(x));
  }
}

TEST_CASE("ratio recovers exact multiples") {
  testing::Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    GroupElement x = elem2(testing::rand_rational(rng, 9, 5), testing::rand_rational(rng, 9, 5));
    if (x.is_zero()) continue;
    Rational q = testing::rand_rational(rng, 9, 5);
    GroupElement y = x * q;
    CHECK(rational_ratio(x, y) == q);
    CHECK(scalar_mul(rational_ratio(x, y), x) == y);
  }
}

TEST_CASE("textual round trip") {
  GroupElement x = elem2(Rational(-7, 3), Rational(5));
  CHECK(x.str() == "(-7/3, 5)");
  CHECK(GroupElement::parse(x.str()) == x);
  CHECK_THROWS_AS(GroupElement::parse("nope"), SyntaxError);
}
