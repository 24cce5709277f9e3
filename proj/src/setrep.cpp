#include "oag/setrep.hpp"

#include <algorithm>
#include <sstream>

namespace oag {

static long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

Block::Block(GroupElement base, std::vector<GroupElement> pattern, IndexSet indices)
    : base_(std::move(base)), pattern_(std::move(pattern)), indices_(std::move(indices)) {
  if (pattern_.empty()) throw EmptyPattern();
  GroupElement zero = GroupElement::zero(base_.rank());
  sum_ = zero;
  prefix_.push_back(zero);
  for (const auto& p : pattern_) {
    if (p.rank() != base_.rank()) throw RankMismatch("pattern letter rank mismatch");
    if (!(p > zero)) throw NonPositive("pattern letters must be strictly positive");
    sum_ = sum_ + p;
    prefix_.push_back(sum_);
  }
}

GroupElement Block::element(long long k) const {
  long long cycles = floor_div(k, m());
  int j = static_cast<int>(mod_floor(k, m()));
  return base_ + sum_ * Rational(Int(cycles)) + prefix_[j];
}

long long Block::anchor_index() const {
  if (empty()) throw EmptySet("anchor of empty block");
  if (indices_.bounded_below()) return indices_.min_element();
  return *indices_.try_prev(indices_.lo_threshold());
}

// d > n*P for every integer n, i.e. d strictly dominates the pattern scale.
static bool dominates_all_multiples(const GroupElement& d, const GroupElement& P) {
  GroupElement zero = GroupElement::zero(d.rank());
  return d > zero && d.leading_index() < P.leading_index();
}

bool Block::all_below(const GroupElement& c) const {
  if (empty()) return true;
  for (int j = 0; j < m(); ++j) {
    IndexSet kj = indices_.intersect(IndexSet::progression(j, m()));
    if (kj.is_empty()) continue;
    if (kj.bounded_above()) {
      if (!(element(kj.max_element()) < c)) return false;
    } else {
      if (!dominates_all_multiples(c - base_ - prefix_[j], sum_)) return false;
    }
  }
  return true;
}

bool Block::all_above(const GroupElement& c) const {
  if (empty()) return true;
  for (int j = 0; j < m(); ++j) {
    IndexSet kj = indices_.intersect(IndexSet::progression(j, m()));
    if (kj.is_empty()) continue;
    if (kj.bounded_below()) {
      if (!(element(kj.min_element()) > c)) return false;
    } else {
      if (!dominates_all_multiples(base_ + prefix_[j] - c, sum_)) return false;
    }
  }
  return true;
}

bool Block::all_above_eq(const GroupElement& c) const {
  if (empty()) return true;
  for (int j = 0; j < m(); ++j) {
    IndexSet kj = indices_.intersect(IndexSet::progression(j, m()));
    if (kj.is_empty()) continue;
    if (kj.bounded_below()) {
      if (element(kj.min_element()) < c) return false;
    } else {
      if (!dominates_all_multiples(base_ + prefix_[j] - c, sum_)) return false;
    }
  }
  return true;
}

std::optional<long long> Block::grid_index(const GroupElement& x) const {
  for (int j = 0; j < m(); ++j) {
    GroupElement y = x - base_ - prefix_[j];
    long long n;
    if (y.is_zero()) {
      n = 0;
    } else {
      Rational q;
      if (!try_rational_ratio(sum_, y, q)) continue;
      if (!is_integer(q)) continue;
      Int ni = num(q);
      if (ni > Int(1) << 62 || ni < -(Int(1) << 62)) continue;
      n = static_cast<long long>(ni);
    }
    return n * m() + j;
  }
  return std::nullopt;
}

Block Block::translated(const GroupElement& c) const {
  return Block(base_ + c, pattern_, indices_);
}

Block Block::scaled(const Rational& q) const {
  if (!(q > 0)) throw NonPositive("scale factor must be positive");
  std::vector<GroupElement> pat;
  pat.reserve(pattern_.size());
  for (const auto& p : pattern_) pat.push_back(p * q);
  return Block(base_ * q, std::move(pat), indices_);
}

Block Block::reflected() const {
  // -element(k) enumerated by k' = -k walks the reversed pattern from -base.
  std::vector<GroupElement> pat(pattern_.rbegin(), pattern_.rend());
  return Block(-base_, std::move(pat), indices_.negate());
}

bool separated_before(const Block& a, const Block& b) {
  if (a.empty() || b.empty()) return true;
  if (b.has_min()) return a.all_below(b.min_elem());
  if (a.has_max()) return b.all_above(a.max_elem());
  // Both face each other unbounded; compare residue class pairs.
  for (int j = 0; j < a.m(); ++j) {
    IndexSet u = a.indices().intersect(IndexSet::progression(j, a.m()));
    if (u.is_empty()) continue;
    for (int j2 = 0; j2 < b.m(); ++j2) {
      IndexSet v = b.indices().intersect(IndexSet::progression(j2, b.m()));
      if (v.is_empty()) continue;
      bool u_top = u.bounded_above();
      bool v_bot = v.bounded_below();
      if (u_top && v_bot) {
        if (!(a.element(u.max_element()) < b.element(v.min_element()))) return false;
      } else if (u_top) {
        GroupElement d = b.base() + b.prefix(j2) - a.element(u.max_element());
        if (!dominates_all_multiples(d, b.pattern_sum())) return false;
      } else if (v_bot) {
        GroupElement d = b.element(v.min_element()) - a.base() - a.prefix(j);
        if (!dominates_all_multiples(d, a.pattern_sum())) return false;
      } else {
        GroupElement d = (b.base() + b.prefix(j2)) - (a.base() + a.prefix(j));
        if (!dominates_all_multiples(d, a.pattern_sum()) ||
            !dominates_all_multiples(d, b.pattern_sum()))
          return false;
      }
    }
  }
  return true;
}

BlockSet BlockSet::validate(int rank, std::vector<Block> blocks, bool nonneg) {
  std::vector<Block> kept;
  for (auto& b : blocks) {
    if (b.empty()) continue;
    if (b.rank() != rank) throw RankMismatch("block rank differs from set rank");
    kept.push_back(std::move(b));
  }
  std::stable_sort(kept.begin(), kept.end(), [](const Block& x, const Block& y) {
    return x.element(x.anchor_index()) < y.element(y.anchor_index());
  });
  for (size_t i = 0; i + 1 < kept.size(); ++i) {
    if (!separated_before(kept[i], kept[i + 1]))
      throw OverlapError("blocks " + std::to_string(i) + " and " + std::to_string(i + 1) +
                         " are not separated");
  }
  if (nonneg) {
    GroupElement zero = GroupElement::zero(rank);
    for (const auto& b : kept)
      if (!b.all_above_eq(zero)) throw Error("nonneg flag set but block dips below 0");
  }
  return BlockSet(rank, std::move(kept), nonneg);
}

BlockSet BlockSet::from_points(int rank, const std::vector<GroupElement>& pts, bool nonneg) {
  std::vector<GroupElement> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Block> blocks;
  GroupElement one = GroupElement::unit(rank, rank - 1);
  for (const auto& p : sorted) blocks.push_back(Block(p, {one}, IndexSet::singleton(0)));
  return validate(rank, std::move(blocks), nonneg);
}

bool BlockSet::is_finite() const {
  for (const auto& b : blocks_)
    if (!b.indices().is_finite()) return false;
  return true;
}

long long BlockSet::size_finite() const {
  long long n = 0;
  for (const auto& b : blocks_) n += b.indices().size_finite();
  return n;
}

GroupElement BlockSet::min_elem() const {
  if (is_empty()) throw EmptySet();
  if (!has_min()) throw UnboundedBelow();
  return blocks_.front().min_elem();
}

GroupElement BlockSet::max_elem() const {
  if (is_empty()) throw EmptySet();
  if (!has_max()) throw UnboundedAbove();
  return blocks_.back().max_elem();
}

bool BlockSet::member(const GroupElement& x) const { return locate(x).has_value(); }

std::optional<std::pair<int, long long>> BlockSet::locate(const GroupElement& x) const {
  if (x.rank() != rank_) throw RankMismatch("point rank differs from set rank");
  for (int i = 0; i < static_cast<int>(blocks_.size()); ++i) {
    auto k = blocks_[i].grid_index(x);
    if (k && blocks_[i].indices().member(*k)) return std::make_pair(i, *k);
  }
  return std::nullopt;
}

// Least realized index k with element(k) >= from, if any.
static std::optional<long long> start_index(const Block& b, const GroupElement& from) {
  if (b.empty()) return std::nullopt;
  if (b.all_below(from)) return std::nullopt;
  if (b.all_above_eq(from)) {
    if (!b.indices().bounded_below()) throw NotWellOrderedAbove();
    return b.indices().min_element();
  }
  // Mixed: locate the grid boundary by galloping + binary search.
  long long lo = 0, hi = 0;
  if (b.element(0) >= from) {
    long long step = 1;
    while (b.element(lo) >= from) {
      hi = lo;
      lo -= step;
      step *= 2;
    }
  } else {
    long long step = 1;
    while (b.element(hi) < from) {
      lo = hi;
      hi += step;
      step *= 2;
    }
  }
  // Invariant: element(lo) < from <= element(hi).
  while (hi - lo > 1) {
    long long mid = lo + (hi - lo) / 2;
    if (b.element(mid) >= from)
      hi = mid;
    else
      lo = mid;
  }
  return b.indices().try_next(hi - 1);
}

std::vector<GroupElement> BlockSet::enumerate_window(const GroupElement& from, int count) const {
  std::vector<GroupElement> out;
  for (const auto& b : blocks_) {
    if (static_cast<int>(out.size()) >= count) break;
    auto k = start_index(b, from);
    if (!k) continue;
    std::optional<long long> cur = k;
    while (cur && static_cast<int>(out.size()) < count) {
      out.push_back(b.element(*cur));
      cur = b.indices().try_next(*cur);
    }
  }
  return out;
}

BlockSet BlockSet::translate(const GroupElement& c) const {
  std::vector<Block> bs;
  for (const auto& b : blocks_) bs.push_back(b.translated(c));
  return BlockSet(rank_, std::move(bs), false);
}

BlockSet BlockSet::scale(const Rational& q) const {
  std::vector<Block> bs;
  for (const auto& b : blocks_) bs.push_back(b.scaled(q));
  return BlockSet(rank_, std::move(bs), nonneg_);
}

BlockSet BlockSet::reflect() const {
  std::vector<Block> bs;
  for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it) bs.push_back(it->reflected());
  return BlockSet(rank_, std::move(bs), false);
}

// Attempts to merge two interleaving blocks onto a common rank-1 lattice.
// Returns nullopt when their elements do not span a single rational line,
// in which case the union is not representable.
static std::optional<Block> merge_rank1(const Block& a, const Block& b) {
  std::vector<GroupElement> gens;
  gens.push_back(a.pattern_sum());
  for (int j = 1; j < a.m(); ++j) gens.push_back(a.prefix(j));
  gens.push_back(b.pattern_sum());
  for (int j = 1; j < b.m(); ++j) gens.push_back(b.prefix(j));
  gens.push_back(b.base() - a.base());
  GroupElement g0 = a.pattern_sum();
  Rational lambda_gcd(0);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Rational q;
    if (!try_rational_ratio(g0, g, q)) return std::nullopt;
    lambda_gcd = rational_gcd(lambda_gcd, q);
  }
  GroupElement eta = g0 * lambda_gcd;
  GroupElement base0 = a.base();

  auto index_image = [&](const Block& blk) {
    // {t : base0 + t*eta in blk} as an index set.
    Rational s_r = rational_ratio(eta, blk.pattern_sum());
    long long s = static_cast<long long>(num(s_r));
    long long L = lcm_ll(blk.indices().period(), blk.m());
    long long per = std::max<long long>(1, s) * L;
    auto t_of = [&](long long k) {
      return static_cast<long long>(num(rational_ratio(eta, blk.element(k) - base0)));
    };
    long long t1 = t_of(blk.indices().lo_threshold() - 2 * L);
    long long t2 = t_of(blk.indices().hi_threshold() + 2 * L);
    auto pred = [&](long long t) {
      GroupElement x = base0 + eta * Rational(Int(t));
      auto k = blk.grid_index(x);
      return k && blk.indices().member(*k);
    };
    return IndexSet::from_predicate(pred, per, std::min(t1, t2) - per, std::max(t1, t2) + per);
  };

  IndexSet ka = index_image(a);
  IndexSet kb = index_image(b);
  return Block(base0, {eta}, ka.union_with(kb));
}

BlockSet BlockSet::union_with(const BlockSet& o) const {
  if (rank_ != o.rank_) throw RankMismatch("union of sets with different ranks");
  std::vector<Block> pool = blocks_;
  pool.insert(pool.end(), o.blocks_.begin(), o.blocks_.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::stable_sort(pool.begin(), pool.end(), [](const Block& x, const Block& y) {
      return x.element(x.anchor_index()) < y.element(y.anchor_index());
    });
    for (size_t i = 0; i + 1 < pool.size() && !changed; ++i) {
      for (size_t j = i + 1; j < pool.size() && !changed; ++j) {
        if (separated_before(pool[i], pool[j])) continue;
        auto merged = merge_rank1(pool[i], pool[j]);
        if (!merged) {
          std::string w = "union not representable; interleaving blocks near " +
                          pool[i].element(pool[i].anchor_index()).str() + " and " +
                          pool[j].element(pool[j].anchor_index()).str();
          throw NotRepresentable(w);
        }
        pool[i] = *merged;
        pool.erase(pool.begin() + j);
        changed = true;
      }
    }
  }
  return validate(rank_, std::move(pool), nonneg_ && o.nonneg_);
}

std::string BlockSet::str() const {
  std::ostringstream os;
  os << "BlockSet(rank " << rank_ << ", " << blocks_.size() << " blocks)";
  return os.str();
}

}  // namespace oag
