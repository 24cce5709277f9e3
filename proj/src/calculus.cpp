#include "oag/calculus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace oag {

std::vector<ChainComponent> chain_partition(const BlockSet& d) {
  std::vector<ChainComponent> chains;
  const auto& bs = d.blocks();
  int n = static_cast<int>(bs.size());
  int i = 0;
  while (i < n) {
    int j = i;
    while (j + 1 < n && bs[j].has_max() && bs[j + 1].has_min()) ++j;
    chains.push_back(ChainComponent{i, j, bs[i].has_min(), bs[j].has_max()});
    i = j + 1;
  }
  return chains;
}

GroupElement successor(const BlockSet& d, const GroupElement& a) {
  auto loc = d.locate(a);
  if (!loc) throw NotMember(a.str() + " is not in the set");
  auto [bi, k] = *loc;
  const Block& b = d.blocks()[bi];
  auto nk = b.indices().try_next(k);
  if (nk) return b.element(*nk);
  if (bi + 1 == static_cast<int>(d.blocks().size())) throw IsMaximal();
  const Block& c = d.blocks()[bi + 1];
  if (!c.has_min()) throw NoLeastAbove();
  return c.min_elem();
}

GroupElement gamma(const BlockSet& d, const GroupElement& a) {
  if (!d.member(a)) throw NotMember(a.str() + " is not in the set");
  if (d.has_max() && a == d.max_elem()) {
    auto diffs = diff_set(d);
    return diffs.back();
  }
  return successor(d, a) - a;
}

std::vector<GroupElement> diff_set(const BlockSet& d) {
  if (d.is_finite() && d.size_finite() < 2) throw TooSmall();
  std::set<GroupElement> out;
  for (const auto& b : d.blocks()) {
    const IndexSet& K = b.indices();
    long long L = lcm_ll(K.period(), b.m());
    long long w0 = K.lo_threshold() - 2 * L - K.period();
    long long w1 = K.hi_threshold() + 2 * L + K.period();
    auto k = K.try_next(w0 - 1);
    while (k && *k <= w1) {
      auto k2 = K.try_next(*k);
      if (!k2) break;
      out.insert(b.element(*k2) - b.element(*k));
      k = k2;
    }
  }
  const auto& bs = d.blocks();
  for (size_t i = 0; i + 1 < bs.size(); ++i)
    if (bs[i].has_max() && bs[i + 1].has_min())
      out.insert(bs[i + 1].min_elem() - bs[i].max_elem());
  return std::vector<GroupElement>(out.begin(), out.end());
}

BlockSet iter_diff(const BlockSet& d, int n) {
  BlockSet cur = d;
  for (int i = 1; i <= n; ++i) {
    std::vector<GroupElement> diffs;
    try {
      diffs = diff_set(cur);
    } catch (const TooSmall&) {
      throw Exhausted("difference set exhausted at stage " + std::to_string(i));
    }
    cur = BlockSet::from_points(d.rank(), diffs);
  }
  return cur;
}

// ---------------------------------------------------------------------------
// ChainView

ChainView::ChainView(const BlockSet& d, const ChainComponent& chain) : d_(&d), chain_(chain) {
  const auto& bs = d.blocks();
  base_pos_.resize(chain.last_block - chain.first_block + 1);
  base_pos_[0] = 0;
  for (int b = chain.first_block + 1; b <= chain.last_block; ++b) {
    const Block& prev = bs[b - 1];
    long long anchor_prev = prev.anchor_index();
    long long max_prev = prev.indices().max_element();
    long long rank_max = prev.indices().count_range(anchor_prev + 1, max_prev);
    base_pos_[b - chain.first_block] = base_pos_[b - chain.first_block - 1] + rank_max + 1;
  }
  build_word();
}

static long long rank_in(const IndexSet& K, long long anchor, long long k) {
  if (k >= anchor) return K.count_range(anchor + 1, k);
  return -K.count_range(k + 1, anchor);
}

std::optional<long long> ChainView::first_position() const {
  if (!chain_.left_bounded) return std::nullopt;
  return base_pos_[0];  // anchor of a bounded-below block is its minimum
}

std::optional<long long> ChainView::last_position() const {
  if (!chain_.right_bounded) return std::nullopt;
  const Block& b = d_->blocks()[chain_.last_block];
  long long anchor = b.anchor_index();
  return base_pos_.back() + rank_in(b.indices(), anchor, b.indices().max_element());
}

long long ChainView::block_of_position(long long t) const {
  const auto& bs = d_->blocks();
  for (int b = chain_.first_block; b <= chain_.last_block; ++b) {
    const Block& blk = bs[b];
    long long anchor = blk.anchor_index();
    long long rel = b - chain_.first_block;
    bool lo_open = (b == chain_.first_block) && !chain_.left_bounded;
    long long lo = lo_open ? t : base_pos_[rel] + rank_in(blk.indices(), anchor,
                                                          blk.indices().min_element());
    bool hi_open = (b == chain_.last_block) && !chain_.right_bounded;
    long long hi = hi_open ? t : base_pos_[rel] + rank_in(blk.indices(), anchor,
                                                          blk.indices().max_element());
    if (t >= lo && t <= hi) return b;
  }
  throw Error("position outside chain");
}

void ChainView::extend_cache(long long t) const {
  const auto& bs = d_->blocks();
  if (!cache_init_) {
    cache_.clear();
    cache_lo_ = 0;
    const Block& b0 = bs[chain_.first_block];
    cache_.push_back(b0.element(b0.anchor_index()));
    cache_init_ = true;
  }
  // Track (block, index) while walking; recompute at the ends.
  auto locate_end = [&](long long pos) -> std::pair<int, long long> {
    GroupElement x = cache_[static_cast<size_t>(pos - cache_lo_)];
    auto loc = d_->locate(x);
    return *loc;
  };
  while (t >= cache_lo_ + static_cast<long long>(cache_.size())) {
    auto [bi, k] = locate_end(cache_lo_ + static_cast<long long>(cache_.size()) - 1);
    auto nk = bs[bi].indices().try_next(k);
    if (nk)
      cache_.push_back(bs[bi].element(*nk));
    else if (bi < chain_.last_block)
      cache_.push_back(bs[bi + 1].min_elem());
    else
      throw Error("position past end of chain");
  }
  while (t < cache_lo_) {
    auto [bi, k] = locate_end(cache_lo_);
    auto pk = bs[bi].indices().try_prev(k);
    if (pk)
      cache_.push_front(bs[bi].element(*pk));
    else if (bi > chain_.first_block)
      cache_.push_front(bs[bi - 1].max_elem());
    else
      throw Error("position before start of chain");
    --cache_lo_;
  }
}

GroupElement ChainView::element_at(long long t) const {
  auto fp = first_position();
  auto lp = last_position();
  if ((fp && t < *fp) || (lp && t > *lp)) throw Error("position outside chain");
  extend_cache(t);
  return cache_[static_cast<size_t>(t - cache_lo_)];
}

std::optional<GroupElement> ChainView::letter_at(long long t) const {
  auto fp = first_position();
  auto lp = last_position();
  if (fp && t < *fp) return std::nullopt;
  if (lp && t + 1 > *lp) return std::nullopt;
  return element_at(t + 1) - element_at(t);
}

std::optional<long long> ChainView::position_of(const GroupElement& x) const {
  auto loc = d_->locate(x);
  if (!loc) return std::nullopt;
  auto [bi, k] = *loc;
  if (bi < chain_.first_block || bi > chain_.last_block) return std::nullopt;
  const Block& b = d_->blocks()[bi];
  return base_pos_[bi - chain_.first_block] + rank_in(b.indices(), b.anchor_index(), k);
}

void ChainView::build_word() {
  const auto& bs = d_->blocks();
  std::vector<GroupElement> alphabet;
  auto letter_id = [&](const GroupElement& g) {
    for (size_t i = 0; i < alphabet.size(); ++i)
      if (alphabet[i] == g) return static_cast<int>(i);
    alphabet.push_back(g);
    return static_cast<int>(alphabet.size() - 1);
  };

  // Middle boundaries: positions beyond which the letter sequence is
  // provably periodic (one full lcm window into each tail).
  long long t_lo, t_hi;
  std::optional<std::vector<int>> left, right;

  const Block& first = bs[chain_.first_block];
  const Block& last = bs[chain_.last_block];

  if (chain_.left_bounded) {
    t_lo = *first_position();
  } else {
    const IndexSet& K = first.indices();
    long long L = lcm_ll(K.period(), first.m());
    long long kL = *K.try_prev(K.lo_threshold() - L);
    t_lo = base_pos_[0] + rank_in(K, first.anchor_index(), kL);
    long long steps =
        static_cast<long long>(K.lo_residues().size()) * (first.m() / std::gcd(K.period(), (long long)first.m()));
    std::vector<int> tail;
    for (long long t = t_lo - steps; t < t_lo; ++t) tail.push_back(letter_id(*letter_at(t)));
    left = tail;
  }
  if (chain_.right_bounded) {
    t_hi = *last_position();
  } else {
    const IndexSet& K = last.indices();
    long long L = lcm_ll(K.period(), last.m());
    long long kR = K.next_in(K.hi_threshold() + L);
    t_hi = base_pos_[chain_.last_block - chain_.first_block] +
           rank_in(K, last.anchor_index(), kR);
    long long steps =
        static_cast<long long>(K.hi_residues().size()) * (last.m() / std::gcd(K.period(), (long long)last.m()));
    std::vector<int> tail;
    for (long long t = t_hi; t < t_hi + steps; ++t) tail.push_back(letter_id(*letter_at(t)));
    right = tail;
  }

  std::vector<int> middle;
  for (long long t = t_lo; t < t_hi; ++t) middle.push_back(letter_id(*letter_at(t)));

  // Reduce tails to their primitive roots; alignment at the middle
  // boundaries is preserved because the primitive length divides.
  if (left) *left = std::vector<int>(left->end() - minimal_period_of_tail(*left), left->end());
  if (right) right->resize(minimal_period_of_tail(*right));

  // Fold middle letters that already follow the periodic pattern into the
  // tails (rotating a tail keeps the word identical).
  if (right) {
    while (!middle.empty() && middle.back() == right->back()) {
      std::rotate(right->rbegin(), right->rbegin() + 1, right->rend());
      middle.pop_back();
    }
  }
  if (left) {
    while (!middle.empty() && middle.front() == left->front()) {
      std::rotate(left->begin(), left->begin() + 1, left->end());
      middle.erase(middle.begin());
      ++t_lo;
    }
  }

  word_.left_tail = left;
  word_.middle = std::move(middle);
  word_.right_tail = right;
  word_.alphabet = std::move(alphabet);
  word_start_ = t_lo;
}

IndexSet ChainView::all_positions() const {
  auto fp = first_position();
  auto lp = last_position();
  if (fp && lp) return IndexSet::range(*fp, *lp);
  if (fp) return IndexSet::half_line_ge(*fp);
  if (lp) return IndexSet::half_line_le(*lp);
  return IndexSet::all();
}

std::vector<Block> ChainView::blocks_from_positions(const IndexSet& positions) const {
  std::vector<Block> out;
  const auto& bs = d_->blocks();
  long long q = positions.period();
  for (int b = chain_.first_block; b <= chain_.last_block; ++b) {
    const Block& blk = bs[b];
    const IndexSet& K = blk.indices();
    long long anchor = blk.anchor_index();
    long long base = base_pos_[b - chain_.first_block];
    long long p = K.period();
    long long per = p * q;
    if (per > (1LL << 30)) throw Error("position period overflow");
    auto pred = [&](long long k) {
      if (!K.member(k)) return false;
      return positions.member(base + rank_in(K, anchor, k));
    };
    // Hints: far enough into each tail that both K and the position set are
    // in their periodic regimes at the corresponding ranks.
    long long s_hi = static_cast<long long>(K.hi_residues().size());
    long long rank_hi = base + rank_in(K, anchor, K.hi_threshold());
    long long c_hi =
        s_hi == 0 ? 1 : std::max<long long>(0, positions.hi_threshold() - rank_hi) / s_hi + 2;
    long long hi_hint = K.hi_threshold() + c_hi * p + per;
    long long s_lo = static_cast<long long>(K.lo_residues().size());
    long long rank_lo = base + rank_in(K, anchor, K.lo_threshold());
    long long c_lo =
        s_lo == 0 ? 1 : std::max<long long>(0, rank_lo - positions.lo_threshold()) / s_lo + 2;
    long long lo_hint = K.lo_threshold() - c_lo * p - per;
    IndexSet sub = IndexSet::from_predicate(pred, per, lo_hint, hi_hint);
    if (!sub.is_empty()) out.push_back(blk.with_indices(sub));
  }
  return out;
}

DifferenceWord chain_word(const BlockSet& d, const ChainComponent& chain) {
  return ChainView(d, chain).word();
}

static ArchClass max_class_of_tail(const DifferenceWord& w) {
  int best = -1;
  for (int id : *w.right_tail) {
    int lead = w.alphabet[id].leading_index();
    if (best < 0 || lead < best) best = lead;
  }
  return ArchClass{best};
}

ArchClass c_star(const BlockSet& d, const GroupElement& a) {
  auto loc = d.locate(a);
  if (!loc) throw NotMember();
  auto chains = chain_partition(d);
  for (const auto& ch : chains) {
    if (loc->first < ch.first_block || loc->first > ch.last_block) continue;
    if (ch.right_bounded) throw FiniteChain();
    ChainView v(d, ch);
    return max_class_of_tail(v.word());
  }
  throw Error("chain lookup failed");
}

std::vector<ArchClass> c_star_set(const BlockSet& d) {
  std::set<int> leads;
  for (const auto& ch : chain_partition(d)) {
    if (ch.right_bounded) continue;
    ChainView v(d, ch);
    leads.insert(max_class_of_tail(v.word()).leading);
  }
  std::vector<ArchClass> out;
  for (int l : leads) out.push_back(ArchClass{l});
  return out;
}

}  // namespace oag
