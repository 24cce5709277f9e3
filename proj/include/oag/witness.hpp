#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oag/calculus.hpp"

namespace oag {

// A level of the interlaced family.  Level 1 is a plain BlockSet; level i+1
// is the sum set {x + y : x in level_i not maximal, y in component}, whose
// copies of the component sit strictly inside the gaps of the previous
// level.  Sum levels have order type beyond any finite block list, so they
// are kept as lazy views with exact membership, predecessor, and windowed
// enumeration.
class LevelSet {
 public:
  static std::shared_ptr<LevelSet> base(BlockSet d);
  static std::shared_ptr<LevelSet> sum(std::shared_ptr<LevelSet> prev, BlockSet component);

  bool member(const GroupElement& x) const;
  // Greatest element strictly below x, when attained.
  std::optional<GroupElement> pred_strict(const GroupElement& x) const;
  // Elements in the open interval (a, b), at most `limit` of them, ascending.
  std::vector<GroupElement> enumerate_between(const GroupElement& a, const GroupElement& b,
                                              int limit) const;
  // The difference set of the level, computed structurally (finite).
  std::vector<GroupElement> diff_values() const;
  GroupElement min_elem() const;
  // The k-th smallest element (k = 0, 1, ...).
  GroupElement kth(int k) const;

  int depth() const { return prev_ ? prev_->depth() + 1 : 1; }
  const BlockSet& component() const { return comp_; }
  const std::shared_ptr<LevelSet>& prev() const { return prev_; }

 private:
  std::shared_ptr<LevelSet> prev_;  // null for the base level
  BlockSet comp_;

  explicit LevelSet(BlockSet d) : comp_(std::move(d)) {}
  LevelSet(std::shared_ptr<LevelSet> p, BlockSet c) : prev_(std::move(p)), comp_(std::move(c)) {}
};

struct InterlacedFamily {
  std::vector<std::shared_ptr<LevelSet>> levels;  // E_1 .. E_n
  std::vector<BlockSet> components;               // scaled inputs Y_2 .. Y_n
};

// Lemma-style interlacing: E_1 = D_1 and E_{i+1} = {x + y : x in E_i not
// maximal, 2^i y in D_{i+1}}, after exact verification of the hypothesis
// chain 0 < D_{i+1} < D_i'.  Verifies at each level that successive gaps of
// E_i contain infinitely many E_{i+1} points (symbolically, plus window
// counts) and that D_{i+1} < 2^{i-1} E_i'.
InterlacedFamily build_interlaced(const std::vector<BlockSet>& ds);

struct InpRow {
  int level;  // 0: direct membership row; i >= 1: distance to level i
  std::vector<std::pair<GroupElement, GroupElement>> intervals;  // open, per column
  int k_inconsistency = 2;
};

struct InpPatternInstance {
  std::vector<InpRow> rows;
  int columns = 0;
  bool dense = false;
  std::vector<std::shared_ptr<LevelSet>> levels;  // referenced by rows
  std::vector<std::pair<std::vector<int>, GroupElement>> paths;  // assignment, realizer
};

// Builds an inp-pattern instance with `columns` columns from an interlaced
// family: one direct row isolating level-1 elements, one distance row per
// deeper level, and a final distance row whose realizers use the density of
// the order.  The dense flag splices in one extra synthetic level, giving
// (levels + 2) rows as in the densely-ordered case.  All columns^rows paths
// are realized when columns <= 4, otherwise 200 sampled paths.
InpPatternInstance build_inp_pattern(const InterlacedFamily& family, int columns, bool dense,
                                     unsigned long long seed = 0);

struct VerifyReport {
  int rows_checked = 0;
  int paths_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Re-checks row 2-inconsistency (interval disjointness, exact) and every
// recorded path realizer (membership evaluation, exact).
VerifyReport verify_instance(const InpPatternInstance& inst);

}  // namespace oag
