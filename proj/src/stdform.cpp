#include "oag/stdform.hpp"

#include <algorithm>
#include <map>

namespace oag {

StdForm::StdForm(std::vector<PointFamily> points, std::vector<IntervalFamily> intervals)
    : points_(std::move(points)), intervals_(std::move(intervals)) {
  for (const auto& f : points_)
    if (f.lambda < 0 || f.lambda >= 1) throw Error("point offset must lie in [0,1)");
  for (const auto& f : intervals_)
    if (f.lo < 0 || !(f.lo < f.hi) || f.hi > 1)
      throw Error("interval offsets must satisfy 0 <= lo < hi <= 1");
  normalize();
}

void StdForm::normalize() {
  std::map<Rational, IndexSet> pts;
  for (auto& f : points_) {
    if (f.w.is_empty()) continue;
    auto it = pts.find(f.lambda);
    if (it == pts.end())
      pts.emplace(f.lambda, f.w);
    else
      it->second = it->second.union_with(f.w);
  }
  std::map<std::pair<Rational, Rational>, IndexSet> ivs;
  for (auto& f : intervals_) {
    if (f.w.is_empty()) continue;
    auto key = std::make_pair(f.lo, f.hi);
    auto it = ivs.find(key);
    if (it == ivs.end())
      ivs.emplace(key, f.w);
    else
      it->second = it->second.union_with(f.w);
  }
  points_.clear();
  for (auto& [l, w] : pts) points_.push_back(PointFamily{w, l});
  intervals_.clear();
  for (auto& [k, w] : ivs) intervals_.push_back(IntervalFamily{w, k.first, k.second});
}

StdForm StdForm::whole_line() {
  std::vector<PointFamily> pts{PointFamily{IndexSet::all(), Rational(0)}};
  std::vector<IntervalFamily> ivs{IntervalFamily{IndexSet::all(), Rational(0), Rational(1)}};
  return StdForm(std::move(pts), std::move(ivs));
}

static Int floor_rational(const Rational& x) { return floor_int(x); }

bool StdForm::member(const Rational& x) const {
  Int w = floor_rational(x);
  Rational frac = x - Rational(w);
  if (w > Int(1) << 60 || w < -(Int(1) << 60)) throw Error("coordinate out of range");
  long long wi = static_cast<long long>(w);
  for (const auto& f : points_)
    if (f.lambda == frac && f.w.member(wi)) return true;
  for (const auto& f : intervals_)
    if (f.lo < frac && frac < f.hi && f.w.member(wi)) return true;
  return false;
}

// Atom decomposition: breakpoints of [0,1) induced by all offsets; each atom
// is a point {b} or an open interval (b, b') carrying one index set.
namespace {

struct Atoms {
  std::vector<Rational> breaks;  // sorted, starts with 0, ends with 1
  // For each breakpoint i < breaks.size()-1: the point atom at breaks[i]
  // and the open atom (breaks[i], breaks[i+1]).
  std::vector<IndexSet> point_w, open_w;
};

std::vector<Rational> collect_breaks(const StdForm& a, const StdForm& b) {
  std::vector<Rational> v{Rational(0), Rational(1)};
  auto add = [&](const Rational& q) { v.push_back(q); };
  for (const auto& f : a.point_families()) add(f.lambda);
  for (const auto& f : b.point_families()) add(f.lambda);
  for (const auto& f : a.interval_families()) {
    add(f.lo);
    add(f.hi);
  }
  for (const auto& f : b.interval_families()) {
    add(f.lo);
    add(f.hi);
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

IndexSet w_at_point(const StdForm& x, const Rational& lambda) {
  IndexSet w = IndexSet::empty();
  for (const auto& f : x.point_families())
    if (f.lambda == lambda) w = w.union_with(f.w);
  for (const auto& f : x.interval_families())
    if (f.lo < lambda && lambda < f.hi) w = w.union_with(f.w);
  return w;
}

IndexSet w_at_open(const StdForm& x, const Rational& lo, const Rational& hi) {
  IndexSet w = IndexSet::empty();
  for (const auto& f : x.interval_families())
    if (f.lo <= lo && hi <= f.hi) w = w.union_with(f.w);
  return w;
}

StdForm rebuild(const std::vector<Rational>& breaks, const std::vector<IndexSet>& point_w,
                const std::vector<IndexSet>& open_w) {
  std::vector<PointFamily> pts;
  std::vector<IntervalFamily> ivs;
  size_t n = breaks.size() - 1;
  // Merge adjacent open atoms (and the point between) with equal sets.
  size_t i = 0;
  while (i < n) {
    if (!point_w[i].is_empty()) pts.push_back(PointFamily{point_w[i], breaks[i]});
    if (!open_w[i].is_empty()) {
      size_t j = i;
      while (j + 1 < n && open_w[j + 1] == open_w[i] && point_w[j + 1] == open_w[i]) ++j;
      ivs.push_back(IntervalFamily{open_w[i], breaks[i], breaks[j + 1]});
      // The swallowed point atoms equal the open set; drop them.
      for (size_t k = i + 1; k <= j; ++k) {
        // point_w[k] == open_w[i] by the merge condition
      }
      i = j + 1;
      continue;
    }
    ++i;
  }
  return StdForm(std::move(pts), std::move(ivs));
}

StdForm combine(const StdForm& a, const StdForm& b,
                const std::function<IndexSet(const IndexSet&, const IndexSet&)>& op) {
  auto breaks = collect_breaks(a, b);
  size_t n = breaks.size() - 1;
  std::vector<IndexSet> point_w(n), open_w(n);
  for (size_t i = 0; i < n; ++i) {
    point_w[i] = op(w_at_point(a, breaks[i]), w_at_point(b, breaks[i]));
    open_w[i] = op(w_at_open(a, breaks[i], breaks[i + 1]), w_at_open(b, breaks[i], breaks[i + 1]));
  }
  return rebuild(breaks, point_w, open_w);
}

}  // namespace

StdForm StdForm::union_with(const StdForm& o) const {
  return combine(*this, o, [](const IndexSet& x, const IndexSet& y) { return x.union_with(y); });
}

StdForm StdForm::intersect(const StdForm& o) const {
  return combine(*this, o, [](const IndexSet& x, const IndexSet& y) { return x.intersect(y); });
}

StdForm StdForm::complement() const {
  return combine(*this, StdForm::empty(),
                 [](const IndexSet& x, const IndexSet&) { return x.complement(); });
}

std::pair<StdForm, StdForm> StdForm::split() const {
  StdForm discrete, open;
  discrete.points_ = points_;
  open.intervals_ = intervals_;
  return {discrete, open};
}

bool StdForm::operator==(const StdForm& o) const {
  if (points_.size() != o.points_.size() || intervals_.size() != o.intervals_.size())
    return false;
  for (size_t i = 0; i < points_.size(); ++i)
    if (!(points_[i].lambda == o.points_[i].lambda && points_[i].w == o.points_[i].w))
      return false;
  for (size_t i = 0; i < intervals_.size(); ++i)
    if (!(intervals_[i].lo == o.intervals_[i].lo && intervals_[i].hi == o.intervals_[i].hi &&
          intervals_[i].w == o.intervals_[i].w))
      return false;
  return true;
}

BlockSet std_to_blockset(const StdForm& x) {
  if (!x.interval_families().empty())
    throw NotDiscrete("interval families cannot become a discrete block set");
  BlockSet out = BlockSet::empty(1);
  GroupElement one = GroupElement::unit(1, 0);
  for (const auto& f : x.point_families()) {
    std::vector<Block> bs;
    bs.push_back(Block(GroupElement(std::vector<Rational>{f.lambda}), {one}, f.w));
    out = out.union_with(BlockSet::validate(1, std::move(bs), false));
  }
  return out;
}

StdForm blockset_to_std(const BlockSet& d) {
  if (d.rank() != 1) throw NotLatticeAligned("standard form needs a rank-1 set");
  std::vector<PointFamily> pts;
  for (const auto& b : d.blocks()) {
    Rational step = b.pattern_sum().coord(0);
    for (int j = 0; j < b.m(); ++j) {
      IndexSet kj = b.indices().intersect(IndexSet::progression(j, b.m()));
      if (kj.is_empty()) continue;
      IndexSet cycles = kj.divide_exact(b.m(), j);
      Rational c = b.base().coord(0) + b.prefix(j).coord(0);
      // Elements c + n*step for n in cycles; split by fractional part.
      Int L = lcm(den(step), den(c));
      Int a_num = num(step) * (L / den(step));
      Int b_num = num(c) * (L / den(c));
      // frac((b_num + n*a_num)/L) has period rho = L/gcd(a_num, L) in n.
      Int g = gcd(a_num < 0 ? Int(-a_num) : a_num, L);
      long long rho = static_cast<long long>(L / g);
      for (long long t = 0; t < rho; ++t) {
        IndexSet cls = cycles.intersect(IndexSet::progression(t, rho));
        if (cls.is_empty()) continue;
        IndexSet u = cls.divide_exact(rho, t);
        Int val = b_num + Int(t) * a_num;
        Int r = val % L;
        if (r < 0) r += L;
        Rational lambda(r, L);
        long long w_at_t = static_cast<long long>((val - r) / L);
        long long slope = static_cast<long long>(a_num * Int(rho) / L);
        IndexSet w = u.affine(slope, w_at_t);
        pts.push_back(PointFamily{std::move(w), lambda});
      }
    }
  }
  return StdForm(std::move(pts), {});
}

}  // namespace oag
