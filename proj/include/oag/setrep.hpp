#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oag/lexgroup.hpp"
#include "oag/semilinear.hpp"

namespace oag {

// One block of a discrete set: a base point, a cyclic word of strictly
// positive steps, and an index set K selecting which lattice positions are
// present.  The k-th grid point is
//
//   element(k) = base + floor(k/m) * sum(pattern) + prefix(k mod m),
//
// which is strictly increasing in k, and the block denotes
// {element(k) : k in K}.
class Block {
 public:
  Block(GroupElement base, std::vector<GroupElement> pattern, IndexSet indices);

  const GroupElement& base() const { return base_; }
  const std::vector<GroupElement>& pattern() const { return pattern_; }
  const IndexSet& indices() const { return indices_; }
  int m() const { return static_cast<int>(pattern_.size()); }
  int rank() const { return base_.rank(); }

  const GroupElement& pattern_sum() const { return sum_; }
  // Sum of the first j letters, 0 <= j <= m.
  const GroupElement& prefix(int j) const { return prefix_[j]; }

  GroupElement element(long long k) const;  // defined on the whole grid
  // element(k+1) - element(k), i.e. pattern[k mod m].
  const GroupElement& step_at(long long k) const { return pattern_[mod_floor(k, m())]; }

  bool empty() const { return indices_.is_empty(); }
  bool has_min() const { return !empty() && indices_.bounded_below(); }
  bool has_max() const { return !empty() && indices_.bounded_above(); }
  GroupElement min_elem() const { return element(indices_.min_element()); }
  GroupElement max_elem() const { return element(indices_.max_element()); }
  // Some realized index (used for ordering blocks).
  long long anchor_index() const;

  // Every element strictly below / strictly above c (exact, symbolic).
  bool all_below(const GroupElement& c) const;
  bool all_above(const GroupElement& c) const;
  // Every element >= c.
  bool all_above_eq(const GroupElement& c) const;

  // Grid index of x if x = element(k) for an integer k; nullopt otherwise.
  std::optional<long long> grid_index(const GroupElement& x) const;

  Block with_indices(IndexSet k) const { return Block(base_, pattern_, std::move(k)); }
  Block translated(const GroupElement& c) const;
  Block scaled(const Rational& q) const;  // q > 0
  Block reflected() const;                // {-x : x in block}

 private:
  GroupElement base_;
  std::vector<GroupElement> pattern_;
  IndexSet indices_;
  GroupElement sum_;
  std::vector<GroupElement> prefix_;
};

// True when every element of a precedes every element of b (exact).
bool separated_before(const Block& a, const Block& b);

// A discrete definable set: a finite list of pairwise separated blocks in
// increasing order.  Separation is validated at construction, which makes
// the represented set discrete and closed with no accumulation point, and
// keeps every derived difference set finite.
class BlockSet {
 public:
  static BlockSet empty(int rank) { return BlockSet(rank, {}, false); }
  // Validates separation, sorts blocks, drops empty ones.
  static BlockSet validate(int rank, std::vector<Block> blocks, bool nonneg = false);
  static BlockSet from_points(int rank, const std::vector<GroupElement>& pts, bool nonneg = false);

  int rank() const { return rank_; }
  bool nonneg() const { return nonneg_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  bool is_empty() const { return blocks_.empty(); }
  bool is_finite() const;
  long long size_finite() const;  // throws when infinite
  bool has_min() const { return !is_empty() && blocks_.front().has_min(); }
  bool has_max() const { return !is_empty() && blocks_.back().has_max(); }
  GroupElement min_elem() const;
  GroupElement max_elem() const;

  bool member(const GroupElement& x) const;
  // (block index, grid index) of a member.
  std::optional<std::pair<int, long long>> locate(const GroupElement& x) const;

  // First `count` elements >= from in increasing order; fewer if the set
  // exhausts.  Throws NotWellOrderedAbove when a block unbounded below lies
  // entirely at or above `from`.
  std::vector<GroupElement> enumerate_window(const GroupElement& from, int count) const;

  BlockSet translate(const GroupElement& c) const;
  BlockSet scale(const Rational& q) const;
  BlockSet reflect() const;
  BlockSet union_with(const BlockSet& o) const;

  std::string str() const;

 private:
  BlockSet(int rank, std::vector<Block> blocks, bool nonneg)
      : rank_(rank), blocks_(std::move(blocks)), nonneg_(nonneg) {}

  int rank_;
  std::vector<Block> blocks_;
  bool nonneg_;
};

}  // namespace oag
