#include "oag/witness.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace oag {

namespace {

enum class PredStatus { Attained, Unattained, Empty };

struct PredResult {
  PredStatus status;
  GroupElement value;
};

// Greatest element of d strictly below x: attained value, unattained
// supremum (a maxless block entirely below x), or nothing below at all.
PredResult blockset_pred_strict(const BlockSet& d, const GroupElement& x) {
  const auto& bs = d.blocks();
  for (auto it = bs.rbegin(); it != bs.rend(); ++it) {
    const Block& b = *it;
    if (b.all_above_eq(x)) continue;
    if (b.all_below(x)) {
      if (b.has_max()) return {PredStatus::Attained, b.max_elem()};
      return {PredStatus::Unattained, GroupElement()};
    }
    // Mixed: largest grid index with element < x, then snap down to K.
    long long lo = 0, hi = 0;
    if (b.element(0) < x) {
      long long step = 1;
      while (b.element(hi) < x) {
        lo = hi;
        hi += step;
        step *= 2;
      }
    } else {
      long long step = 1;
      while (b.element(lo) >= x) {
        hi = lo;
        lo -= step;
        step *= 2;
      }
    }
    // element(lo) < x <= element(hi)
    while (hi - lo > 1) {
      long long mid = lo + (hi - lo) / 2;
      if (b.element(mid) < x)
        lo = mid;
      else
        hi = mid;
    }
    auto k = b.indices().try_prev(lo + 1);
    if (k) return {PredStatus::Attained, b.element(*k)};
    // All realized indices of this block sit at or above x; keep looking in
    // earlier blocks.
  }
  return {PredStatus::Empty, GroupElement()};
}

PredResult blockset_succ_strict(const BlockSet& d, const GroupElement& x) {
  auto w = d.enumerate_window(x, 2);
  for (const auto& e : w)
    if (e > x) return {PredStatus::Attained, e};
  return {PredStatus::Empty, GroupElement()};
}

}  // namespace

std::shared_ptr<LevelSet> LevelSet::base(BlockSet d) {
  return std::shared_ptr<LevelSet>(new LevelSet(std::move(d)));
}

std::shared_ptr<LevelSet> LevelSet::sum(std::shared_ptr<LevelSet> prev, BlockSet component) {
  return std::shared_ptr<LevelSet>(new LevelSet(std::move(prev), std::move(component)));
}

namespace {

std::optional<GroupElement> level_max(const LevelSet& l);

PredResult level_pred(const LevelSet& l, const GroupElement& x) {
  if (!l.prev()) return blockset_pred_strict(l.component(), x);
  auto pm = level_max(*l.prev());
  PredResult e = level_pred(*l.prev(), x);
  for (int guard = 0; guard < 8; ++guard) {
    if (e.status == PredStatus::Unattained) return {PredStatus::Unattained, GroupElement()};
    if (e.status == PredStatus::Empty) return {PredStatus::Empty, GroupElement()};
    if (pm && e.value == *pm) {
      // No copy at the maximal element; step to the previous one.
      e = level_pred(*l.prev(), e.value);
      continue;
    }
    PredResult y = blockset_pred_strict(l.component(), x - e.value);
    if (y.status == PredStatus::Attained) {
      if (y.value > GroupElement::zero(x.rank()))
        return {PredStatus::Attained, e.value + y.value};
      // Only offsets <= 0 below x - e: the copy starts above; fall through
      // to the previous copy.
      e = level_pred(*l.prev(), e.value);
      continue;
    }
    if (y.status == PredStatus::Unattained) return {PredStatus::Unattained, GroupElement()};
    // Empty: x sits at or below the first point of this copy.
    e = level_pred(*l.prev(), e.value);
  }
  throw Error("level predecessor failed to settle");
}

std::optional<GroupElement> level_max(const LevelSet& l) {
  if (!l.prev()) {
    if (l.component().has_max()) return l.component().max_elem();
    return std::nullopt;
  }
  auto pm = level_max(*l.prev());
  if (!pm) return std::nullopt;
  PredResult e = level_pred(*l.prev(), *pm);  // largest non-maximal element
  if (e.status != PredStatus::Attained) return std::nullopt;
  if (!l.component().has_max()) return std::nullopt;
  return e.value + l.component().max_elem();
}

}  // namespace

bool LevelSet::member(const GroupElement& x) const {
  if (!prev_) return comp_.member(x);
  PredResult e = level_pred(*prev_, x);
  if (e.status != PredStatus::Attained) return false;
  auto pm = level_max(*prev_);
  if (pm && e.value == *pm) return false;  // maximal elements carry no copy
  return comp_.member(x - e.value);
}

std::optional<GroupElement> LevelSet::pred_strict(const GroupElement& x) const {
  PredResult r = level_pred(*this, x);
  if (r.status == PredStatus::Attained) return r.value;
  return std::nullopt;
}

GroupElement LevelSet::min_elem() const {
  if (!prev_) return comp_.min_elem();
  return prev_->min_elem() + comp_.min_elem();
}

namespace {

PredResult level_succ(const LevelSet& l, const GroupElement& x) {
  if (!l.prev()) return blockset_succ_strict(l.component(), x);
  // Candidate within the copy around pred(x), else the next copy's first.
  PredResult e = level_pred(*l.prev(), x);
  auto pm = level_max(*l.prev());
  GroupElement zero = GroupElement::zero(x.rank());
  if (e.status == PredStatus::Attained && !(pm && e.value == *pm)) {
    PredResult y = blockset_succ_strict(l.component(), x - e.value);
    if (y.status == PredStatus::Attained) {
      // Stay inside the gap: offsets never reach the next copy base.
      return {PredStatus::Attained, e.value + y.value};
    }
  }
  // First point of the next copy.
  GroupElement from = e.status == PredStatus::Attained ? e.value : x;
  PredResult ne = level_succ(*l.prev(), from);
  for (int guard = 0; guard < 8; ++guard) {
    if (ne.status != PredStatus::Attained) return {PredStatus::Empty, GroupElement()};
    if (!(pm && ne.value == *pm)) {
      GroupElement cand = ne.value + l.component().min_elem();
      if (cand > x) return {PredStatus::Attained, cand};
    }
    ne = level_succ(*l.prev(), ne.value);
  }
  return {PredStatus::Empty, GroupElement()};
}

}  // namespace

std::vector<GroupElement> LevelSet::enumerate_between(const GroupElement& a,
                                                      const GroupElement& b, int limit) const {
  std::vector<GroupElement> out;
  GroupElement cur = a;
  while (static_cast<int>(out.size()) < limit) {
    PredResult n = level_succ(*this, cur);
    if (n.status != PredStatus::Attained || !(n.value < b)) break;
    out.push_back(n.value);
    cur = n.value;
  }
  return out;
}

std::vector<GroupElement> LevelSet::diff_values() const {
  if (!prev_) return diff_set(comp_);
  std::set<GroupElement> out;
  auto ydiffs = diff_set(comp_);
  out.insert(ydiffs.begin(), ydiffs.end());
  if (comp_.has_max()) {
    // Copy-to-copy junctions: gamma_prev(e) - maxY + minY over realized e.
    GroupElement shift = comp_.min_elem() - comp_.max_elem();
    for (const auto& g : prev_->diff_values()) out.insert(g + shift);
  }
  return std::vector<GroupElement>(out.begin(), out.end());
}

GroupElement LevelSet::kth(int k) const {
  GroupElement cur = min_elem();
  for (int i = 0; i < k; ++i) {
    PredResult n = level_succ(*this, cur);
    if (n.status != PredStatus::Attained) throw TooFewElements();
    cur = n.value;
  }
  return cur;
}

// ---------------------------------------------------------------------------

InterlacedFamily build_interlaced(const std::vector<BlockSet>& ds) {
  if (ds.empty()) throw TooFewElements("no input sets");
  InterlacedFamily fam;
  if (!ds[0].has_min()) throw HypothesisFailed(0);
  for (size_t i = 0; i < ds.size(); ++i) {
    if (ds[i].is_finite()) throw HypothesisFailed(static_cast<int>(i));
    if (i > 0) {
      GroupElement zero = GroupElement::zero(ds[i].rank());
      if (!ds[i].has_min() || !(ds[i].min_elem() > zero))
        throw HypothesisFailed(static_cast<int>(i));
      auto prev_diffs = diff_set(ds[i - 1]);
      for (const auto& b : ds[i].blocks())
        if (!b.all_below(prev_diffs.front())) throw HypothesisFailed(static_cast<int>(i));
    }
  }

  fam.levels.push_back(LevelSet::base(ds[0]));
  Rational half(1, 2);
  Rational scale = half;
  for (size_t t = 1; t < ds.size(); ++t) {
    // E_{t+1} = {x + y : x in E_t not maximal, 2^t y in D_{t+1}}.
    BlockSet y = ds[t].scale(scale);
    auto& prev = fam.levels.back();

    // Level condition: D_{t+1} < 2^{t-1} E_t'.
    auto ediffs = prev->diff_values();
    GroupElement bound = ediffs.front();
    Rational pw(1);
    for (size_t u = 1; u < t; ++u) pw *= 2;
    bound = bound * pw;
    for (const auto& b : ds[t].blocks())
      if (!b.all_below(bound)) throw HypothesisFailed(static_cast<int>(t));

    fam.components.push_back(y);
    fam.levels.push_back(LevelSet::sum(prev, std::move(y)));
    scale *= half;

    // Interlacing spot-check: ten points inside each of twenty gaps.
    const auto& lvl_prev = fam.levels[fam.levels.size() - 2];
    const auto& lvl_new = fam.levels.back();
    GroupElement a = lvl_prev->min_elem();
    for (int pair = 0; pair < 20; ++pair) {
      PredResult s = level_succ(*lvl_prev, a);
      if (s.status != PredStatus::Attained) break;
      auto inside = lvl_new->enumerate_between(a, s.value, 10);
      if (static_cast<int>(inside.size()) < 10) throw HypothesisFailed(static_cast<int>(t));
      a = s.value;
    }
  }
  return fam;
}

// ---------------------------------------------------------------------------

InpPatternInstance build_inp_pattern(const InterlacedFamily& family, int columns, bool dense,
                                     unsigned long long seed) {
  if (family.levels.empty()) throw TooFewElements();
  if (columns < 1) throw Error("need at least one column");
  InpPatternInstance inst;
  inst.columns = columns;
  inst.dense = dense;
  inst.levels = family.levels;

  int rank = family.levels.front()->component().rank();
  GroupElement zero = GroupElement::zero(rank);

  if (dense) {
    // One synthetic lowest level: a small arithmetic set strictly inside
    // the gaps of the top level, using the density of the order.
    const auto& top = inst.levels.back();
    GroupElement unit = top->diff_values().front();
    Rational c2(1, 4 * (columns + 2));
    GroupElement w0 = unit * c2;
    std::vector<Block> blocks;
    blocks.push_back(Block(w0, {w0}, IndexSet::range(0, columns + 1)));
    BlockSet w = BlockSet::validate(rank, std::move(blocks), false);
    inst.levels.push_back(LevelSet::sum(top, std::move(w)));
  }

  int top = static_cast<int>(inst.levels.size());  // levels S_1..S_top
  // Offsets used per level t (2..top): the first `columns` elements of the
  // component Y_t; level 1 uses its own first elements directly.
  std::vector<std::vector<GroupElement>> offsets(top + 1);
  for (int t = 2; t <= top; ++t) {
    const BlockSet& y = inst.levels[t - 1]->component();
    auto w = y.enumerate_window(y.min_elem(), columns);
    if (static_cast<int>(w.size()) < columns) throw TooFewElements();
    offsets[t] = std::move(w);
  }
  std::vector<GroupElement> base_pts;
  {
    const auto& e1 = inst.levels.front();
    GroupElement cur = e1->min_elem();
    base_pts.push_back(cur);
    for (int j = 1; j < columns + 1; ++j) {
      cur = e1->kth(j);
      base_pts.push_back(cur);
    }
  }

  // Final-row rational offsets inside the gaps of the top level.
  GroupElement rho0 = inst.levels.back()->diff_values().front() * Rational(1, 4 * (columns + 2));
  std::vector<GroupElement> rho;
  for (int k = 1; k <= columns; ++k) rho.push_back(rho0 * Rational(k));

  // Slack above each row's offsets: everything deeper that a realizer adds.
  // slack[t] bounds sum_{u > t} (offset used at u) + final rho.
  std::vector<GroupElement> slack(top + 1, zero);
  slack[top] = rho.back();
  for (int t = top - 1; t >= 1; --t) slack[t] = slack[t + 1] + offsets[t + 1].back();

  // Sanity: the slack must stay below half the smallest gap of each level,
  // otherwise distance values would escape their cells.
  for (int t = 1; t <= top; ++t) {
    GroupElement min_gap = inst.levels[t - 1]->diff_values().front();
    if (!(slack[t] + slack[t] < min_gap))
      throw TooFewElements("insufficient separation at level " + std::to_string(t));
  }

  auto quarter = [](const GroupElement& g) { return g * Rational(1, 4); };

  // Row 0: direct membership in intervals around the level-1 points.
  {
    InpRow row;
    row.level = 0;
    for (int j = 0; j < columns; ++j) {
      GroupElement g_below = j == 0 ? base_pts[1] - base_pts[0] : base_pts[j] - base_pts[j - 1];
      GroupElement lo = base_pts[j] - quarter(g_below);
      GroupElement hi = base_pts[j] + slack[1] + quarter(base_pts[j + 1] - base_pts[j] - slack[1]);
      row.intervals.push_back({lo, hi});
    }
    inst.rows.push_back(std::move(row));
  }
  // Distance rows for levels 1..top-1 with offsets from the next component.
  for (int t = 1; t < top; ++t) {
    InpRow row;
    row.level = t;
    const auto& ys = offsets[t + 1];
    for (int j = 0; j < columns; ++j) {
      GroupElement g_below = j == 0 ? ys[0] : ys[j] - ys[j - 1];
      GroupElement lo = ys[j] - quarter(g_below);
      GroupElement room = (j + 1 < columns ? ys[j + 1] : ys[j] + g_below) - ys[j];
      GroupElement hi = ys[j] + slack[t + 1] + quarter(room - slack[t + 1]);
      row.intervals.push_back({lo, hi});
    }
    inst.rows.push_back(std::move(row));
  }
  // Final row: distance to the top level, with purely rational offsets.
  {
    InpRow row;
    row.level = top;
    for (int k = 0; k < columns; ++k)
      row.intervals.push_back({rho[k] - quarter(rho0), rho[k] + quarter(rho0)});
    inst.rows.push_back(std::move(row));
  }

  // Realize paths.
  int nrows = static_cast<int>(inst.rows.size());
  auto realize = [&](const std::vector<int>& path) {
    GroupElement x = base_pts[path[0]];
    for (int t = 1; t < nrows - 1; ++t) x = x + offsets[t + 1][path[t]];
    x = x + rho[path[nrows - 1]];
    return x;
  };
  long long total = 1;
  bool full = columns <= 4;
  for (int r = 0; r < nrows && full; ++r) {
    total *= columns;
    if (total > 100000) full = false;
  }
  if (full) {
    std::vector<int> path(nrows, 0);
    while (true) {
      inst.paths.push_back({path, realize(path)});
      int p = nrows - 1;
      while (p >= 0 && ++path[p] == columns) path[p--] = 0;
      if (p < 0) break;
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> col(0, columns - 1);
    for (int s = 0; s < 200; ++s) {
      std::vector<int> path(nrows);
      for (auto& v : path) v = col(rng);
      inst.paths.push_back({path, realize(path)});
    }
  }
  return inst;
}

VerifyReport verify_instance(const InpPatternInstance& inst) {
  VerifyReport rep;
  for (size_t r = 0; r < inst.rows.size(); ++r) {
    const auto& row = inst.rows[r];
    ++rep.rows_checked;
    for (size_t i = 0; i < row.intervals.size(); ++i) {
      if (!(row.intervals[i].first < row.intervals[i].second))
        rep.failures.push_back("row " + std::to_string(r) + " column " + std::to_string(i) +
                               " interval empty");
      for (size_t j = i + 1; j < row.intervals.size(); ++j) {
        // Open intervals are disjoint iff one ends before the other starts.
        bool dis = !(row.intervals[i].second > row.intervals[j].first &&
                     row.intervals[j].second > row.intervals[i].first);
        if (!dis)
          rep.failures.push_back("row " + std::to_string(r) + " columns " + std::to_string(i) +
                                 "," + std::to_string(j) + " overlap");
      }
    }
  }
  for (const auto& [path, x] : inst.paths) {
    ++rep.paths_checked;
    for (size_t r = 0; r < inst.rows.size(); ++r) {
      const auto& row = inst.rows[r];
      const auto& J = row.intervals[static_cast<size_t>(path[r])];
      bool ok;
      if (row.level == 0) {
        ok = J.first < x && x < J.second;
      } else {
        auto p = inst.levels[static_cast<size_t>(row.level - 1)]->pred_strict(x);
        ok = p.has_value() && J.first < (x - *p) && (x - *p) < J.second;
      }
      if (!ok)
        rep.failures.push_back("path realizer " + x.str() + " fails row " + std::to_string(r));
    }
  }
  return rep;
}

}  // namespace oag
