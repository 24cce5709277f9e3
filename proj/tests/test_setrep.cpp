#include <doctest.h>

#include "oag/setrep.hpp"
#include "oracles.hpp"

using namespace oag;
using namespace oag::testing;

namespace {

GroupElement z2() { return GroupElement::zero(2); }
GroupElement e1(const Rational& q = Rational(1)) { return GroupElement::unit(2, 1, q); }
GroupElement e0(const Rational& q = Rational(1)) { return GroupElement::unit(2, 0, q); }

BlockSet naturals() {  // {(0,k) : k >= 0}
  return make_set(2, z2(), {e1()}, IndexSet::half_line_ge(0));
}

}  // namespace

TEST_CASE("validate accepts separated blocks") {
  auto d = naturals();
  CHECK(d.blocks().size() == 1);

  // {(0,k):k>=0} then base (1,0): valid since the first galaxy is bounded.
  std::vector<Block> blocks;
  blocks.push_back(Block(z2(), {e1()}, IndexSet::half_line_ge(0)));
  blocks.push_back(Block(e0(), {e1()}, IndexSet::half_line_ge(0)));
  CHECK_NOTHROW(BlockSet::validate(2, blocks));

  // {(0,k):k>=0} then base (0,5): the second block starts inside the first.
  std::vector<Block> bad;
  bad.push_back(Block(z2(), {e1()}, IndexSet::half_line_ge(0)));
  bad.push_back(Block(e1(Rational(5)), {e1()}, IndexSet::half_line_ge(0)));
  CHECK_THROWS_AS(BlockSet::validate(2, bad), OverlapError);

  CHECK_THROWS_AS(Block(z2(), {}, IndexSet::all()), EmptyPattern);
  CHECK_THROWS_AS(Block(z2(), {z2()}, IndexSet::all()), NonPositive);
}

TEST_CASE("membership solves for cycle and offset") {
  auto d = naturals();
  CHECK(d.member(e1(Rational(7))));
  CHECK_FALSE(d.member(e1(Rational(7, 2))));
  CHECK_FALSE(d.member(e1(Rational(-1))));

  // Pattern (1,2) from (0,0): elements 0,1,3,4,6,7,...
  auto p = make_set(2, z2(), {e1(), e1(Rational(2))}, IndexSet::half_line_ge(0));
  CHECK(p.member(e1(Rational(3))));
  CHECK(p.member(e1(Rational(4))));
  CHECK_FALSE(p.member(e1(Rational(2))));
  CHECK_FALSE(p.member(e1(Rational(5))));
}

TEST_CASE("enumerate_window") {
  auto d = naturals();
  auto w = d.enumerate_window(e1(Rational(5, 2)), 2);
  REQUIRE(w.size() == 2);
  CHECK(w[0] == e1(Rational(3)));
  CHECK(w[1] == e1(Rational(4)));
  CHECK(BlockSet::empty(2).enumerate_window(z2(), 5).empty());

  // Two galaxies: finite first block, then the second galaxy.
  std::vector<Block> blocks;
  blocks.push_back(Block(z2(), {e1()}, IndexSet::range(0, 2)));
  blocks.push_back(Block(e0(), {e1()}, IndexSet::half_line_ge(0)));
  auto two = BlockSet::validate(2, blocks);
  auto v = two.enumerate_window(e1(Rational(10)), 2);
  REQUIRE(v.size() == 2);
  CHECK(v[0] == e0());
  CHECK(v[1] == e0() + e1());
}

TEST_CASE("translate, scale, reflect") {
  auto d = naturals();
  auto t = d.translate(e1(Rational(1, 2)));
  CHECK(t.member(e1(Rational(3, 2))));
  CHECK_FALSE(t.member(e1(Rational(1))));

  CHECK(d.scale(Rational(1)).member(e1(Rational(4))));
  CHECK_THROWS_AS(d.scale(Rational(0)), NonPositive);

  auto pts = BlockSet::from_points(2, {z2(), e1(Rational(1)), e1(Rational(3))});
  auto r = pts.reflect();
  CHECK(r.member(e1(Rational(-3))));
  CHECK(r.member(e1(Rational(-1))));
  CHECK(r.member(z2()));
  CHECK_FALSE(r.member(e1(Rational(1))));
  auto w = r.enumerate_window(e1(Rational(-100)), 3);
  REQUIRE(w.size() == 3);
  CHECK(w[0] == e1(Rational(-3)));
}

TEST_CASE("transforms commute with membership") {
  Rng rng(31);
  for (int round = 0; round < 40; ++round) {
    BlockSet d = rand_blockset(rng);
    GroupElement c = elem2(rand_rational(rng, 5, 4), rand_rational(rng, 5, 4));
    Rational q = rand_positive_rational(rng, 5, 4);
    auto dt = d.translate(c);
    auto ds = d.scale(q);
    auto dr = d.reflect();
    auto w = d.enumerate_window(d.min_elem(), 25);
    for (const auto& x : w) {
      REQUIRE(dt.member(x + c));
      REQUIRE(ds.member(x * q));
      REQUIRE(dr.member(-x));
    }
    GroupElement off = e1(Rational(1, 17));
    for (size_t i = 0; i + 1 < w.size() && i < 5; ++i) {
      GroupElement x = w[i] + off;
      REQUIRE(dt.member(x + c) == d.member(x));
      REQUIRE(ds.member(x * q) == d.member(x));
      REQUIRE(dr.member(-x) == d.member(x));
    }
  }
}

TEST_CASE("union merges interleaved progressions") {
  // Evens union odds collapses onto the step-1 lattice.
  auto evens = make_set(2, z2(), {e1(Rational(2))}, IndexSet::half_line_ge(0));
  auto odds = make_set(2, e1(), {e1(Rational(2))}, IndexSet::half_line_ge(0));
  auto u = evens.union_with(odds);
  for (int k = 0; k <= 30; ++k) REQUIRE(u.member(e1(Rational(k))));
  CHECK_FALSE(u.member(e1(Rational(1, 2))));
  CHECK_FALSE(u.member(e1(Rational(-1))));

  auto d = naturals();
  CHECK(d.union_with(BlockSet::empty(2)).member(e1(Rational(5))));
  auto dd = d.union_with(d);
  auto w = dd.enumerate_window(z2(), 10);
  for (int k = 0; k < 10; ++k) REQUIRE(w[static_cast<size_t>(k)] == e1(Rational(k)));
}

TEST_CASE("union rejects lattice-incompatible interleavings") {
  // A step-(0,1) line against offsets in a different coordinate direction:
  // the merged family spans a rank-2 lattice and has no block form.
  auto a = make_set(2, z2(), {e1()}, IndexSet::half_line_ge(0));
  auto b = make_set(2, elem2(Rational(0), Rational(1, 2)), {elem2(Rational(1), Rational(0))},
                    IndexSet::half_line_ge(0));
  CHECK_THROWS_AS(a.union_with(b), NotRepresentable);
}

TEST_CASE("union agrees with membership on random pairs") {
  Rng rng(32);
  int done = 0;
  for (int round = 0; round < 60 && done < 30; ++round) {
    BlockSet a = rand_blockset(rng, 3, 3);
    BlockSet b = rand_blockset(rng, 3, 3);
    BlockSet u = BlockSet::empty(2);
    try {
      u = a.union_with(b);
    } catch (const NotRepresentable&) {
      continue;
    }
    ++done;
    auto wa = a.enumerate_window(a.min_elem(), 40);
    auto wb = b.enumerate_window(b.min_elem(), 40);
    for (const auto& x : wa) REQUIRE(u.member(x));
    for (const auto& x : wb) REQUIRE(u.member(x));
    auto wu = u.enumerate_window(u.min_elem(), 60);
    for (const auto& x : wu) REQUIRE((a.member(x) || b.member(x)));
  }
  CHECK(done >= 20);
}

TEST_CASE("enumeration is strictly increasing and matches membership") {
  Rng rng(33);
  for (int round = 0; round < 50; ++round) {
    BlockSet d = rand_blockset(rng);
    auto w = d.enumerate_window(d.min_elem(), 60);
    for (size_t i = 0; i + 1 < w.size(); ++i) REQUIRE(w[i] < w[i + 1]);
    for (const auto& x : w) REQUIRE(d.member(x));
  }
}

TEST_CASE("no accumulation: midpoints between successive elements are outside") {
  Rng rng(34);
  for (int round = 0; round < 30; ++round) {
    BlockSet d = rand_blockset(rng);
    auto w = d.enumerate_window(d.min_elem(), 30);
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      GroupElement mid = (w[i] + w[i + 1]) * Rational(1, 2);
      REQUIRE(mid > w[i]);
      REQUIRE(mid < w[i + 1]);
      REQUIRE_FALSE(d.member(mid));
    }
  }
}
