#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "oag/setrep.hpp"
#include "oag/words.hpp"

namespace oag {

// A Z-chain of a BlockSet: a maximal run of consecutive blocks joined at
// bounded junctions (the left block has a maximum and the right one a
// minimum), so every element inside the run is finitely many successor
// steps from every other.
struct ChainComponent {
  int first_block, last_block;  // inclusive block index range
  bool left_bounded, right_bounded;
};

std::vector<ChainComponent> chain_partition(const BlockSet& d);

// Least element of D strictly above a; requires a in D.  Throws IsMaximal
// at the top of D and NoLeastAbove at a maxed-out junction whose right
// neighbour has no minimum.
GroupElement successor(const BlockSet& d, const GroupElement& a);

// The difference S_D(a) - a; at the maximum of D this returns max D'
// (the boundary convention used throughout the fine-structure results).
GroupElement gamma(const BlockSet& d, const GroupElement& a);

// The difference set D' = {gamma_D(a) : a in D not maximal}, sorted
// ascending.  Always finite for this representation; requires |D| >= 2.
std::vector<GroupElement> diff_set(const BlockSet& d);

// n-th iterated difference set, re-embedded as a BlockSet of singleton
// blocks after the first application.  Throws Exhausted when an
// intermediate stage shrinks to at most one element.
BlockSet iter_diff(const BlockSet& d, int n);

// Exposes a chain as a bi-directional sequence of positions.  Positions are
// integers anchored at the first block's anchor index; position p maps to
// the p-th element of the chain relative to that anchor.  The chain word
// (sequence of successive differences) is eventually periodic on each
// infinite side by construction.
class ChainView {
 public:
  ChainView(const BlockSet& d, const ChainComponent& chain);

  bool left_infinite() const { return !chain_.left_bounded; }
  bool right_infinite() const { return !chain_.right_bounded; }
  // Position range of realized elements; finite ends only.
  std::optional<long long> first_position() const;
  std::optional<long long> last_position() const;

  GroupElement element_at(long long t) const;
  // Letter between positions t and t+1; nullopt outside the domain.
  std::optional<GroupElement> letter_at(long long t) const;

  std::optional<long long> position_of(const GroupElement& x) const;

  // The chain's difference word together with its position alignment:
  // word position 0 corresponds to chain position word_start().
  const DifferenceWord& word() const { return word_; }
  long long word_start() const { return word_start_; }
  // Chain positions [middle_start, middle_end) hold the word's middle; the
  // tails extend periodically outside.
  long long middle_start() const { return word_start_; }
  long long middle_end() const { return word_start_ + static_cast<long long>(word_.middle.size()); }

  // Converts a set of chain positions into blocks (sub-blocks of the
  // chain's blocks).  The position set must be a subset of the realized
  // positions.
  std::vector<Block> blocks_from_positions(const IndexSet& positions) const;

  // All realized positions as an IndexSet (relative to the anchor).
  IndexSet all_positions() const;

  const ChainComponent& component() const { return chain_; }
  const BlockSet& ambient() const { return *d_; }

 private:
  const BlockSet* d_;
  ChainComponent chain_;
  std::vector<long long> base_pos_;  // position of each block's anchor element
  DifferenceWord word_;
  long long word_start_ = 0;

  // Dense element cache over a contiguous position range.
  mutable std::deque<GroupElement> cache_;
  mutable long long cache_lo_ = 0;  // position of cache_.front()
  mutable bool cache_init_ = false;

  long long block_of_position(long long t) const;
  void extend_cache(long long t) const;
  void build_word();
};

// Maximal Archimedean class occurring in every right tail of the chain of
// a; requires that chain to be infinite on the right.
ArchClass c_star(const BlockSet& d, const GroupElement& a);

// {C*(a) : a in D}, one representative per right-infinite chain.
std::vector<ArchClass> c_star_set(const BlockSet& d);

// Difference word of a chain (convenience wrapper over ChainView).
DifferenceWord chain_word(const BlockSet& d, const ChainComponent& chain);

}  // namespace oag
