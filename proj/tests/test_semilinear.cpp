#include <doctest.h>

#include "oag/semilinear.hpp"
#include "oracles.hpp"

using namespace oag;

static IndexSet evens_ge0() {
  return IndexSet::from_parts(2, 0, 0, {0}, {}, {0});
}

TEST_CASE("membership") {
  IndexSet evens = evens_ge0();
  CHECK(evens.member(4));
  CHECK_FALSE(evens.member(-2));
  CHECK_FALSE(evens.member(3));
  // {3} with (5+7Z above 10)
  IndexSet s = IndexSet::from_parts(7, 3, 10, {3}, {}, {5});
  CHECK(s.member(19));  // 19 = 5 mod 7 and 19 > 10
  CHECK(s.member(3));
  CHECK_FALSE(s.member(5));
  CHECK_FALSE(s.member(20));
}

TEST_CASE("boolean operations on small cases") {
  IndexSet evens = IndexSet::progression(0, 2);
  IndexSet odds = IndexSet::progression(1, 2);
  CHECK(evens.union_with(odds) == IndexSet::all());
  CHECK(evens.intersect(odds).is_empty());
  CHECK(IndexSet::half_line_ge(0).complement() == IndexSet::half_line_le(-1));
}

TEST_CASE("min element") {
  IndexSet evens = evens_ge0();
  CHECK(evens.min_element() == 0);
  IndexSet s = IndexSet::from_parts(7, 11, 10, {}, {}, {5});
  CHECK(s.min_element() == 12);
  CHECK_THROWS_AS(IndexSet::all().min_element(), UnboundedBelow);
  CHECK_THROWS_AS(IndexSet::empty().min_element(), EmptySet);
}

TEST_CASE("next_in") {
  IndexSet evens = IndexSet::progression(0, 2);
  CHECK(evens.next_in(3) == 4);
  CHECK(evens.next_in(4) == 6);
  IndexSet r = IndexSet::range(0, 10);
  CHECK_THROWS_AS(r.next_in(10), NoSuccessor);
}

TEST_CASE("gap sizes") {
  CHECK(IndexSet::progression(0, 2).gap_sizes() == std::set<long long>{2});
  // {0,1} together with 3Z above 3
  IndexSet s = IndexSet::from_parts(3, 0, 1, {0, 1}, {}, {0});
  CHECK(s.gap_sizes() == std::set<long long>{1, 2, 3});
  CHECK(IndexSet::all().gap_sizes() == std::set<long long>{1});
  CHECK_THROWS_AS(IndexSet::singleton(4).gap_sizes(), TooSmall);
}

TEST_CASE("enumerate") {
  IndexSet evens = IndexSet::progression(0, 2);
  CHECK(evens.enumerate(1, 3) == std::vector<long long>{2, 4, 6});
  CHECK(IndexSet::empty().enumerate(-5, 4).empty());
  IndexSet s = IndexSet::from_parts(7, 11, 10, {}, {}, {5});
  CHECK(s.enumerate(0, 2) == std::vector<long long>{12, 19});
}

TEST_CASE("boolean ops agree with membership on a window") {
  testing::Rng rng(21);
  for (int round = 0; round < 60; ++round) {
    IndexSet a = testing::rand_index_set(rng);
    IndexSet b = testing::rand_index_set(rng);
    IndexSet u = a.union_with(b);
    IndexSet i = a.intersect(b);
    IndexSet c = a.complement();
    for (long long k = -10000; k <= 10000; k += (round % 7) + 1) {
      bool am = a.member(k), bm = b.member(k);
      REQUIRE(u.member(k) == (am || bm));
      REQUIRE(i.member(k) == (am && bm));
      REQUIRE(c.member(k) == !am);
    }
  }
}

TEST_CASE("canonical form is idempotent and equality-complete") {
  testing::Rng rng(22);
  for (int round = 0; round < 200; ++round) {
    IndexSet a = testing::rand_index_set(rng);
    // Rebuild the same set from a sampled window and wider thresholds; the
    // canonical forms must coincide.
    long long lo = a.lo_threshold() - 3 * a.period() - 5;
    long long hi = a.hi_threshold() + 3 * a.period() + 5;
    IndexSet b = IndexSet::from_predicate([&](long long k) { return a.member(k); },
                                          a.period(), lo, hi);
    CHECK(a == b);
    // Union with itself changes nothing.
    CHECK(a.union_with(a) == a);
    // Double complement is the identity.
    CHECK(a.complement().complement() == a);
  }
}

TEST_CASE("gap sizes match brute force beyond thresholds") {
  testing::Rng rng(23);
  for (int round = 0; round < 120; ++round) {
    IndexSet a = testing::rand_index_set(rng);
    bool finite = a.is_finite();
    if (finite && a.size_finite() < 2) continue;
    auto gaps = a.gap_sizes();
    // Brute force on a window of length 4 periods beyond both thresholds.
    long long lo = a.lo_threshold() - 4 * a.period();
    long long hi = a.hi_threshold() + 4 * a.period();
    std::set<long long> brute;
    std::optional<long long> prev;
    for (auto k = a.try_next(lo - 1); k && *k <= hi; k = a.try_next(*k)) {
      if (prev) brute.insert(*k - *prev);
      prev = *k;
    }
    if (prev && a.try_next(*prev)) brute.insert(*a.try_next(*prev) - *prev);
    CHECK(gaps == brute);
  }
}

TEST_CASE("affine and divide are exact") {
  testing::Rng rng(24);
  for (int round = 0; round < 80; ++round) {
    IndexSet a = testing::rand_index_set(rng);
    IndexSet img = a.affine(3, -7);
    for (long long k = -60; k <= 60; ++k)
      REQUIRE(img.member(3 * k - 7) == a.member(k));
    CHECK(img.divide_exact(3, -7) == a);
    IndexSet neg = a.negate();
    for (long long k = -60; k <= 60; ++k) REQUIRE(neg.member(-k) == a.member(k));
  }
}

TEST_CASE("count_range agrees with enumeration") {
  testing::Rng rng(25);
  for (int round = 0; round < 60; ++round) {
    IndexSet a = testing::rand_index_set(rng);
    long long lo = -35, hi = 42;
    long long n = 0;
    for (long long k = lo; k <= hi; ++k)
      if (a.member(k)) ++n;
    CHECK(a.count_range(lo, hi) == n);
  }
}
