#include <doctest.h>

#include "oag/stdform.hpp"
#include "oracles.hpp"

using namespace oag;
using namespace oag::testing;

namespace {

// Sample rationals with denominators <= 64 around [-100, 100].
std::vector<Rational> sample_points(Rng& rng, int n) {
  std::uniform_int_distribution<int> num(-800, 800), den(1, 64);
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) out.push_back(Rational(num(rng), den(rng)));
  return out;
}

}  // namespace

TEST_CASE("membership in interval families") {
  // X = U_{w in 2Z} (w + 1/4, w + 1/2)
  StdForm x({}, {IntervalFamily{IndexSet::progression(0, 2), Rational(1, 4), Rational(1, 2)}});
  CHECK(x.member(Rational(23, 10)));  // w = 2: 2.25 < 2.3 < 2.5
  CHECK_FALSE(x.member(Rational(13, 10)));
  CHECK_FALSE(x.member(Rational(9, 4)));  // endpoint excluded
}

TEST_CASE("union with complement covers the line") {
  Rng rng(61);
  StdForm x = rand_stdform(rng);
  StdForm u = x.union_with(x.complement());
  for (const auto& q : sample_points(rng, 500)) REQUIRE(u.member(q));
}

TEST_CASE("points never meet a disjoint-offset interval family") {
  StdForm pts({PointFamily{IndexSet::all(), Rational(0)}}, {});
  StdForm ivs({}, {IntervalFamily{IndexSet::all(), Rational(1, 4), Rational(1, 2)}});
  CHECK(pts.intersect(ivs).is_empty());
}

TEST_CASE("boolean laws by membership sampling") {
  Rng rng(62);
  for (int round = 0; round < 25; ++round) {
    StdForm a = rand_stdform(rng);
    StdForm b = rand_stdform(rng);
    StdForm u = a.union_with(b);
    StdForm i = a.intersect(b);
    StdForm ca = a.complement();
    StdForm dm = ca.intersect(b.complement());     // complement of union
    StdForm dist = a.intersect(b.union_with(ca));  // distributivity probe
    for (const auto& q : sample_points(rng, 400)) {
      bool am = a.member(q), bm = b.member(q);
      REQUIRE(u.member(q) == (am || bm));
      REQUIRE(i.member(q) == (am && bm));
      REQUIRE(ca.member(q) == !am);
      REQUIRE(dm.member(q) == !(am || bm));
      REQUIRE(dist.member(q) == (am && (bm || !am)));
    }
  }
}

TEST_CASE("split separates points from intervals") {
  Rng rng(63);
  for (int round = 0; round < 20; ++round) {
    StdForm x = rand_stdform(rng);
    auto [discrete, open] = x.split();
    CHECK(discrete.interval_families().empty());
    CHECK(open.point_families().empty());
    for (const auto& q : sample_points(rng, 300)) {
      REQUIRE(x.member(q) == (discrete.member(q) || open.member(q)));
      bool both = discrete.member(q) && open.member(q);
      REQUIRE_FALSE(both);
    }
  }
}

TEST_CASE("std_to_blockset on a point family") {
  // X = {w + 1/2 : w in 2Z, w >= 0}
  IndexSet w = IndexSet::progression(0, 2).intersect(IndexSet::half_line_ge(0));
  StdForm x({PointFamily{w, Rational(1, 2)}}, {});
  BlockSet d = std_to_blockset(x);
  CHECK(d.rank() == 1);
  CHECK(d.member(GroupElement(std::vector<Rational>{Rational(1, 2)})));
  CHECK(d.member(GroupElement(std::vector<Rational>{Rational(5, 2)})));
  CHECK_FALSE(d.member(GroupElement(std::vector<Rational>{Rational(3, 2)})));
  CHECK_FALSE(d.member(GroupElement(std::vector<Rational>{Rational(-3, 2)})));

  StdForm iv({}, {IntervalFamily{IndexSet::all(), Rational(0), Rational(1)}});
  CHECK_THROWS_AS(std_to_blockset(iv), NotDiscrete);
}

TEST_CASE("round trip preserves membership") {
  Rng rng(64);
  for (int round = 0; round < 15; ++round) {
    StdForm x = rand_stdform(rng);
    auto [discrete, open] = x.split();
    BlockSet d = std_to_blockset(discrete);
    StdForm back = blockset_to_std(d);
    for (const auto& q : sample_points(rng, 300))
      REQUIRE(back.member(q) == discrete.member(q));
    if (!d.is_empty() && d.has_min()) {
      auto w = d.enumerate_window(d.min_elem(), 200);
      for (const auto& e : w) REQUIRE(back.member(e.coord(0)));
    }
  }
}

TEST_CASE("blockset_to_std handles multi-letter patterns") {
  // Elements 0, 1/3, 1, 4/3, 2, ...: base 0, pattern [1/3, 2/3].
  GroupElement third = GroupElement::unit(1, 0, Rational(1, 3));
  GroupElement two_thirds = GroupElement::unit(1, 0, Rational(2, 3));
  BlockSet d =
      make_set(1, GroupElement::zero(1), {third, two_thirds}, IndexSet::half_line_ge(0));
  StdForm x = blockset_to_std(d);
  CHECK(x.member(Rational(0)));
  CHECK(x.member(Rational(1, 3)));
  CHECK(x.member(Rational(7, 3)));
  CHECK_FALSE(x.member(Rational(2, 3)));
  CHECK_FALSE(x.member(Rational(-1)));

  Rng rng(65);
  CHECK_THROWS_AS(blockset_to_std(rand_blockset(rng)), NotLatticeAligned);
}
