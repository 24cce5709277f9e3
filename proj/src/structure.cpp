#include "oag/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace oag {

std::vector<GroupElement> primitive_generator_word(const std::vector<GroupElement>& sigma) {
  if (sigma.empty()) throw Error("primitive generator of empty word");
  std::vector<GroupElement> alphabet;
  std::vector<int> ids;
  for (const auto& g : sigma) {
    int id = -1;
    for (size_t i = 0; i < alphabet.size(); ++i)
      if (alphabet[i] == g) id = static_cast<int>(i);
    if (id < 0) {
      alphabet.push_back(g);
      id = static_cast<int>(alphabet.size()) - 1;
    }
    ids.push_back(id);
  }
  auto root = primitive_generator(ids);
  std::vector<GroupElement> out;
  for (int id : root) out.push_back(alphabet[id]);
  return out;
}

// ---------------------------------------------------------------------------
// Shared positional helpers

// Period of the letter predicate on each infinite side of a chain word.
static long long word_period(const ChainView& v) {
  long long p = 1;
  if (v.word().has_left()) p = lcm_ll(p, static_cast<long long>(v.word().left_tail->size()));
  if (v.word().has_right()) p = lcm_ll(p, static_cast<long long>(v.word().right_tail->size()));
  return p;
}

// Positions whose forward letters match sigma exactly.
static IndexSet match_positions(const ChainView& v, const std::vector<GroupElement>& sigma) {
  long long per = word_period(v);
  long long n = static_cast<long long>(sigma.size());
  auto pred = [&](long long t) {
    for (long long i = 0; i < n; ++i) {
      auto l = v.letter_at(t + i);
      if (!l || !(*l == sigma[static_cast<size_t>(i)])) return false;
    }
    return true;
  };
  long long lo = v.middle_start() - n - 2 * per;
  long long hi = v.middle_end() + n + 2 * per;
  IndexSet all = v.all_positions();
  return IndexSet::from_predicate(pred, per, lo, hi).intersect(all);
}

BlockSet p_sigma(const BlockSet& d, const std::vector<GroupElement>& sigma) {
  if (sigma.empty()) throw Error("p_sigma needs a nonempty word");
  auto diffs = diff_set(d);
  for (const auto& g : sigma) {
    if (!std::binary_search(diffs.begin(), diffs.end(), g))
      throw AlphabetMismatch("letter " + g.str() + " is not in the difference set");
  }
  std::vector<Block> blocks;
  for (const auto& ch : chain_partition(d)) {
    ChainView v(d, ch);
    IndexSet pos = match_positions(v, sigma);
    auto bs = v.blocks_from_positions(pos);
    blocks.insert(blocks.end(), bs.begin(), bs.end());
  }
  return BlockSet::validate(d.rank(), std::move(blocks), false);
}

// ---------------------------------------------------------------------------
// Uniformization

namespace {

// Per-chain gamma sequence sample for run analysis: the letters with enough
// periodic copies on each side, plus the boundary convention at the top of
// the set.  A blank (-1) marks an element whose difference is undefined
// (top of a chain at an unbounded junction).
struct GammaSample {
  std::vector<GroupElement> seq;  // provided differences; index-aligned runs
  std::vector<bool> provided;
  bool left_artificial, right_artificial;  // sampled tail cut vs true end
};

GammaSample gamma_sample(const BlockSet& d, const ChainView& v, bool is_last_chain,
                         const std::vector<GroupElement>& ambient_diffs) {
  GammaSample s;
  const DifferenceWord& w = v.word();
  long long lo = v.middle_start(), hi = v.middle_end();
  if (w.has_left()) lo -= 4LL * static_cast<long long>(w.left_tail->size());
  if (w.has_right()) hi += 4LL * static_cast<long long>(w.right_tail->size());
  s.left_artificial = w.has_left();
  s.right_artificial = w.has_right();
  for (long long t = lo; t < hi; ++t) {
    auto l = v.letter_at(t);
    if (l) {
      s.seq.push_back(*l);
      s.provided.push_back(true);
    }
  }
  if (!w.has_right()) {
    // Top element: convention gamma = max D' when it is the maximum of the
    // whole set, otherwise its difference is undefined.
    if (is_last_chain && !ambient_diffs.empty()) {
      s.seq.push_back(ambient_diffs.back());
      s.provided.push_back(true);
    } else {
      s.seq.push_back(GroupElement());
      s.provided.push_back(false);
    }
  }
  return s;
}

std::set<GroupElement> tail_letters(const DifferenceWord& w, bool left) {
  std::set<GroupElement> out;
  const auto& tail = left ? *w.left_tail : *w.right_tail;
  for (int id : tail) out.insert(w.alphabet[id]);
  return out;
}

}  // namespace

std::optional<long long> uniform_bound(const BlockSet& d) {
  if (d.is_empty()) return 1;
  if (d.is_finite() && d.size_finite() < 2) return 1;
  auto diffs = diff_set(d);
  std::set<GroupElement> A(diffs.begin(), diffs.end());

  auto chains = chain_partition(d);
  long long worst = 1;
  for (size_t ci = 0; ci < chains.size(); ++ci) {
    ChainView v(d, chains[ci]);
    const auto& w = v.word();
    // Every infinite tail must realize the full alphabet.
    if (w.has_left() && tail_letters(w, true) != A) return std::nullopt;
    if (w.has_right() && tail_letters(w, false) != A) return std::nullopt;
    GammaSample s = gamma_sample(d, v, ci + 1 == chains.size(), diffs);
    for (const auto& delta : A) {
      long long run = 0, best = 0;
      for (size_t i = 0; i < s.seq.size(); ++i) {
        if (s.provided[i] && s.seq[i] == delta)
          run = 0;
        else
          best = std::max(best, ++run);
      }
      worst = std::max(worst, best + 1);
    }
  }
  // Finite chains with no infinite side bound their own windows.
  return worst;
}

namespace {

// A convex stretch of one chain, by position range (nullopt = unbounded).
struct ChainPiece {
  int chain;
  std::optional<long long> from, to;  // inclusive element positions
  std::set<GroupElement> alphabet;    // letters strictly inside the piece
  bool infinite;
};

std::set<GroupElement> range_letters(const ChainView& v, std::optional<long long> from,
                                     std::optional<long long> to) {
  std::set<GroupElement> out;
  const auto& w = v.word();
  long long lo = from ? *from : v.middle_start() - static_cast<long long>(w.left_tail->size());
  long long hi = to ? *to : v.middle_end() + static_cast<long long>(w.right_tail->size());
  for (long long t = lo; t < hi; ++t) {
    auto l = v.letter_at(t);
    if (l) out.insert(*l);
  }
  if (!from) for (const auto& g : tail_letters(w, true)) out.insert(g);
  if (!to) for (const auto& g : tail_letters(w, false)) out.insert(g);
  return out;
}

IndexSet range_to_positions(const std::optional<long long>& from,
                            const std::optional<long long>& to) {
  if (from && to) return IndexSet::range(*from, *to);
  if (from) return IndexSet::half_line_ge(*from);
  if (to) return IndexSet::half_line_le(*to);
  return IndexSet::all();
}

}  // namespace

std::vector<UniformPiece> uniformize(const BlockSet& d) {
  std::vector<UniformPiece> out;
  if (d.is_empty()) return out;
  auto chains = chain_partition(d);
  std::vector<ChainView> views;
  views.reserve(chains.size());
  for (const auto& ch : chains) views.emplace_back(d, ch);

  // Split each chain so every infinite stretch has tails realizing exactly
  // the letters of that stretch.
  std::vector<ChainPiece> pieces;
  for (size_t ci = 0; ci < chains.size(); ++ci) {
    const ChainView& v = views[ci];
    const auto& w = v.word();
    std::optional<long long> first = v.first_position(), last = v.last_position();
    auto whole = range_letters(v, first, last);

    bool left_ok = !w.has_left() || tail_letters(w, true) == whole;
    bool right_ok = !w.has_right() || tail_letters(w, false) == whole;
    if (left_ok && right_ok) {
      pieces.push_back(ChainPiece{static_cast<int>(ci), first, last, whole,
                                  !first.has_value() || !last.has_value()});
      continue;
    }

    std::optional<long long> cursor = first;  // next uncovered position
    std::optional<long long> cut_l;           // end of the left piece
    if (w.has_left()) {
      auto AL = tail_letters(w, true);
      long long t = v.middle_start();
      while (true) {
        auto l = v.letter_at(t);
        if (!l || !AL.count(*l)) break;
        ++t;
      }
      // Positions <= t form the maximal left stretch with letters in AL.
      cut_l = t;
      pieces.push_back(ChainPiece{static_cast<int>(ci), std::nullopt, cut_l, AL, true});
      cursor = *cut_l + 1;
    }
    std::optional<long long> cut_r;  // start of the right piece
    if (w.has_right()) {
      auto AR = tail_letters(w, false);
      long long t = v.middle_end() - 1;
      while (true) {
        auto l = v.letter_at(t);
        if (!l || !AR.count(*l)) break;
        --t;
      }
      cut_r = t + 1;
      if (cursor && *cut_r < *cursor) cut_r = *cursor;  // stretches met in the middle
    }
    long long mid_end = cut_r ? *cut_r - 1 : *last;
    if (!cursor || *cursor <= mid_end) {
      // Finite middle remainder (always uniformized on its own).
      std::optional<long long> mf = cursor ? cursor : first;
      pieces.push_back(
          ChainPiece{static_cast<int>(ci), mf, mid_end, range_letters(v, mf, mid_end), false});
    }
    if (cut_r)
      pieces.push_back(ChainPiece{static_cast<int>(ci), cut_r, last,
                                  range_letters(v, cut_r, last), true});
  }

  // Merge consecutive pieces when every infinite stretch in the group
  // realizes the whole merged alphabet.
  size_t i = 0;
  while (i < pieces.size()) {
    size_t j = i;
    std::set<GroupElement> U = pieces[i].alphabet;
    auto group_ok = [&](size_t hi, const std::set<GroupElement>& alpha) {
      for (size_t k = i; k <= hi; ++k)
        if (pieces[k].infinite && pieces[k].alphabet != alpha) return false;
      return true;
    };
    while (j + 1 < pieces.size()) {
      std::set<GroupElement> U2 = U;
      for (const auto& g : pieces[j + 1].alphabet) U2.insert(g);
      if (!group_ok(j + 1, U2)) break;
      U = std::move(U2);
      ++j;
    }
    std::vector<Block> blocks;
    for (size_t k = i; k <= j; ++k) {
      const auto& pc = pieces[k];
      auto bs = views[pc.chain].blocks_from_positions(range_to_positions(pc.from, pc.to));
      blocks.insert(blocks.end(), bs.begin(), bs.end());
    }
    BlockSet piece = BlockSet::validate(d.rank(), std::move(blocks), false);
    auto n = uniform_bound(piece);
    if (!n) throw Error("internal: uniformize produced a non-uniformized piece");
    out.push_back(UniformPiece{std::move(piece), *n});
    i = j + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Archimedean partition

static IndexSet positions_with_letter_class(const ChainView& v, int leading) {
  long long per = word_period(v);
  auto pred = [&](long long t) {
    auto l = v.letter_at(t);
    return l && l->leading_index() == leading;
  };
  long long lo = v.middle_start() - 2 * per - 2;
  long long hi = v.middle_end() + 2 * per + 2;
  return IndexSet::from_predicate(pred, per, lo, hi).intersect(v.all_positions());
}

static std::vector<BlockSet> arch_partition_rec(const BlockSet& d, int fuel) {
  if (fuel <= 0) throw Error("arch_partition failed to terminate");
  std::vector<BlockSet> out;
  if (d.is_empty()) return out;
  if (d.is_finite() && d.size_finite() <= 1) {
    out.push_back(d);
    return out;
  }
  auto diffs = diff_set(d);
  std::set<int> classes;
  for (const auto& g : diffs) classes.insert(g.leading_index());
  if (classes.size() <= 1) {
    out.push_back(d);
    return out;
  }
  int top = *classes.begin();  // smallest leading index = largest class

  std::vector<Block> selected, rest;
  auto chains = chain_partition(d);
  for (size_t ci = 0; ci < chains.size(); ++ci) {
    ChainView v(d, chains[ci]);
    IndexSet pos = positions_with_letter_class(v, top);
    if (ci + 1 == chains.size() && d.has_max() && diffs.back().leading_index() == top) {
      // Boundary convention: the maximum carries gamma = max D'.
      auto t = v.position_of(d.max_elem());
      pos = pos.union_with(IndexSet::singleton(*t));
    }
    IndexSet cpos = v.all_positions().set_minus(pos);
    auto sb = v.blocks_from_positions(pos);
    selected.insert(selected.end(), sb.begin(), sb.end());
    auto rb = v.blocks_from_positions(cpos);
    rest.insert(rest.end(), rb.begin(), rb.end());
  }
  BlockSet d1 = BlockSet::validate(d.rank(), std::move(selected), false);
  BlockSet rem = BlockSet::validate(d.rank(), std::move(rest), false);
  if (!d1.is_empty()) out.push_back(d1);
  for (auto& u : uniformize(rem)) {
    auto sub = arch_partition_rec(u.piece, fuel - 1);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::vector<BlockSet> arch_partition(const BlockSet& d) {
  if (!uniform_bound(d)) throw NotUniformized();
  return arch_partition_rec(d, 64);
}

// ---------------------------------------------------------------------------
// Sigma-interval cover

namespace {

struct Segment {
  int chain;
  std::vector<GroupElement> pi;  // primitive cyclic pattern
  std::optional<long long> from, to;  // conforming element positions
};

// Letters as element word of a tail.
std::vector<GroupElement> tail_word(const DifferenceWord& w, bool left) {
  std::vector<GroupElement> out;
  const auto& t = left ? *w.left_tail : *w.right_tail;
  for (int id : t) out.push_back(w.alphabet[id]);
  return out;
}

bool cyc_equal_words(const std::vector<GroupElement>& a, const std::vector<GroupElement>& b) {
  if (a.size() != b.size()) return false;
  size_t n = a.size();
  if (n == 0) return true;
  for (size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = a[(s + i) % n] == b[i];
    if (ok) return true;
  }
  return false;
}

}  // namespace

SigmaCover sigma_interval_cover(const BlockSet& d) {
  auto nb = uniform_bound(d);
  if (!nb) throw NotUniformized();
  SigmaCover cover;
  if (d.is_empty()) return cover;
  if (d.is_finite() && d.size_finite() < 2) {
    for (const auto& b : d.blocks())
      cover.leftover.push_back(b.min_elem());
    return cover;
  }
  auto diffs = diff_set(d);
  std::set<int> classes;
  for (const auto& g : diffs) classes.insert(g.leading_index());
  if (classes.size() > 1)
    throw NotUniformized("difference set spans several Archimedean classes");

  auto chains = chain_partition(d);
  std::vector<ChainView> views;
  for (const auto& ch : chains) views.emplace_back(d, ch);

  // Segments: maximal conforming stretches, with non-conforming gaps
  // recorded as leftovers.
  std::vector<Segment> segs;  // in position order; chain order respected
  std::vector<std::pair<int, std::pair<long long, long long>>> leftover_ranges;
  long long mu = 1;

  for (size_t ci = 0; ci < chains.size(); ++ci) {
    const ChainView& v = views[ci];
    const auto& w = v.word();
    auto first = v.first_position();
    auto last = v.last_position();
    if (first && last) {  // finite chain: all leftover
      leftover_ranges.push_back({static_cast<int>(ci), {*first, *last}});
      continue;
    }
    std::vector<GroupElement> piL, piR;
    if (w.has_left()) {
      piL = tail_word(w, true);
      mu = lcm_ll(mu, static_cast<long long>(piL.size()));
    }
    if (w.has_right()) {
      piR = tail_word(w, false);
      mu = lcm_ll(mu, static_cast<long long>(piR.size()));
    }

    if (w.has_left() && w.has_right() && cyc_equal_words(piL, piR)) {
      // Possibly fully periodic: check the middle region.
      long long L = static_cast<long long>(piR.size());
      bool full = true;
      for (long long t = v.middle_start() - 2 * L; t < v.middle_end() && full; ++t)
        full = *v.letter_at(t) == *v.letter_at(t + L);
      if (full) {
        segs.push_back(Segment{static_cast<int>(ci), piR, std::nullopt, std::nullopt});
        continue;
      }
    }
    if (!w.has_left() && w.has_right()) {
      // Bounded below: conforming suffix; possibly the whole chain.
      long long L = static_cast<long long>(piR.size());
      long long r = v.middle_end();
      while (r - 1 >= *first && *v.letter_at(r - 1) == *v.letter_at(r - 1 + L)) --r;
      if (r > *first)
        leftover_ranges.push_back({static_cast<int>(ci), {*first, r - 1}});
      segs.push_back(Segment{static_cast<int>(ci), piR, r, std::nullopt});
      continue;
    }
    if (w.has_left() && !w.has_right()) {
      long long L = static_cast<long long>(piL.size());
      long long l = v.middle_start();
      while (l + 1 <= *last && *v.letter_at(l) == *v.letter_at(l - L)) ++l;
      segs.push_back(Segment{static_cast<int>(ci), piL, std::nullopt, l});
      if (l + 1 <= *last)
        leftover_ranges.push_back({static_cast<int>(ci), {l + 1, *last}});
      continue;
    }
    // Two-sided, not fully periodic: left stretch, leftover middle, right
    // stretch.
    long long LL = static_cast<long long>(piL.size());
    long long LR = static_cast<long long>(piR.size());
    long long l = v.middle_start();
    while (*v.letter_at(l) == *v.letter_at(l - LL)) ++l;
    long long r = v.middle_end();
    while (r - 1 > l && *v.letter_at(r - 1) == *v.letter_at(r - 1 + LR)) --r;
    segs.push_back(Segment{static_cast<int>(ci), piL, std::nullopt, l});
    if (l + 1 <= r - 1) leftover_ranges.push_back({static_cast<int>(ci), {l + 1, r - 1}});
    segs.push_back(Segment{static_cast<int>(ci), piR, r, std::nullopt});
  }
  cover.mu = mu;

  // Group consecutive segments of one cyclic class into intervals.  A
  // leftover range between two segments breaks adjacency only when it lies
  // between them in the same chain; ranges from finite chains separate
  // segments of distinct chains as well.  Segment order in `segs` together
  // with leftover bookkeeping already reflects both.
  auto letter_word_at = [&](const Segment& s, long long t, long long len) {
    std::vector<GroupElement> out;
    for (long long i = 0; i < len; ++i) out.push_back(*views[s.chain].letter_at(t + i));
    return out;
  };

  size_t i = 0;
  // Chains adjacent in `segs` may be separated by a leftover finite chain
  // or leftover middle; detect adjacency by chain continuity.
  auto adjacent = [&](const Segment& a, const Segment& b) {
    if (a.chain == b.chain) return !a.to ? false : (b.from && *b.from == 0);  // never: same chain
    if (b.chain != a.chain + 1) {
      // Intervening chains must all be covered, i.e. none skipped.
      return false;
    }
    // a must run to the top of its chain and b start at the bottom of its.
    if (a.to.has_value()) return false;
    if (b.from.has_value() && views[b.chain].first_position() &&
        *b.from != *views[b.chain].first_position())
      return false;
    if (b.from.has_value() && !views[b.chain].first_position()) return false;
    // No leftover sits between them when a is cofinal and b coinitial.
    return true;
  };

  while (i < segs.size()) {
    size_t j = i;
    while (j + 1 < segs.size() && cyc_equal_words(segs[j].pi, segs[j + 1].pi) &&
           adjacent(segs[j], segs[j + 1]))
      ++j;

    // Build one interval from segs[i..j].
    SigmaInterval iv;
    iv.first_chain = segs[i].chain;
    iv.last_chain = segs[j].chain;
    long long piLen = static_cast<long long>(segs[i].pi.size());
    long long reps = mu / piLen;

    // Witness a: first covered position of the first segment.
    std::optional<long long> a_pos = segs[i].from;
    if (a_pos) {
      iv.lo = views[segs[i].chain].element_at(*a_pos);
      iv.sigma.clear();
      auto base = letter_word_at(segs[i], *a_pos, piLen);
      for (long long rsp = 0; rsp < reps; ++rsp)
        iv.sigma.insert(iv.sigma.end(), base.begin(), base.end());
    } else {
      // Left-unbounded: fix sigma from the tail phase at the middle start.
      auto base = letter_word_at(segs[i], views[segs[i].chain].middle_start(), piLen);
      for (long long rsp = 0; rsp < reps; ++rsp)
        iv.sigma.insert(iv.sigma.end(), base.begin(), base.end());
    }

    // Witness b: last phase-matching position with a full forward match.
    std::optional<long long> b_pos = segs[j].to;
    if (b_pos) {
      long long cand = *b_pos - mu;
      // Align the phase so the forward word at b equals sigma.
      bool found = false;
      for (long long t = cand; t > cand - piLen && !found; --t) {
        if (segs[j].from && t < *segs[j].from) break;
        if (letter_word_at(segs[j], t, mu) == iv.sigma) {
          b_pos = t;
          found = true;
        }
      }
      if (!found) {
        // Segment too short to host a witness: demote to leftover.
        for (size_t k = i; k <= j; ++k) {
          long long lo = segs[k].from ? *segs[k].from : 0;
          long long hi = segs[k].to ? *segs[k].to : 0;
          if (!segs[k].from || !segs[k].to)
            throw Error("internal: unbounded segment without witness");
          leftover_ranges.push_back({segs[k].chain, {lo, hi}});
        }
        i = j + 1;
        continue;
      }
      iv.hi = views[segs[j].chain].element_at(*b_pos);
      if (*b_pos + 1 <= *segs[j].to)
        leftover_ranges.push_back({segs[j].chain, {*b_pos + 1, *segs[j].to}});
    }

    for (size_t k = i; k <= j; ++k) {
      std::optional<long long> f = (k == i) ? a_pos : segs[k].from;
      std::optional<long long> t = (k == j) ? b_pos : segs[k].to;
      iv.ranges.push_back(SigmaInterval::ChainRange{segs[k].chain, f, t});
    }
    cover.intervals.push_back(std::move(iv));
    i = j + 1;
  }

  for (const auto& [chain, range] : leftover_ranges)
    for (long long t = range.first; t <= range.second; ++t)
      cover.leftover.push_back(views[chain].element_at(t));
  std::sort(cover.leftover.begin(), cover.leftover.end());
  return cover;
}

// ---------------------------------------------------------------------------
// Pseudo-arithmetic decomposition

Decomposition pseudo_arith_decomp(const BlockSet& d) {
  Decomposition out;
  if (d.is_empty()) return out;

  for (auto& u : uniformize(d)) {
    for (auto& v : arch_partition(u.piece)) {
      for (auto& u2 : uniformize(v)) {
        const BlockSet& comp = u2.piece;
        if (comp.is_finite() && comp.size_finite() < 2) {
          for (const auto& b : comp.blocks()) out.points.push_back(b.min_elem());
          continue;
        }
        SigmaCover cover = sigma_interval_cover(comp);
        out.points.insert(out.points.end(), cover.leftover.begin(), cover.leftover.end());

        auto chains = chain_partition(comp);
        std::vector<ChainView> views;
        for (const auto& ch : chains) views.emplace_back(comp, ch);

        for (const auto& iv : cover.intervals) {
          auto tau = primitive_generator_word(iv.sigma);
          long long l = static_cast<long long>(tau.size());
          GroupElement eta = GroupElement::zero(comp.rank());
          for (const auto& g : tau) eta = eta + g;

          std::vector<std::vector<Block>> piece_blocks(static_cast<size_t>(l));
          for (const auto& cr : iv.ranges) {
            const ChainView& cv = views[cr.chain];
            IndexSet range = range_to_positions(cr.pos_from, cr.pos_to);
            IndexSet mpos = match_positions(cv, tau).intersect(range);
            for (long long i2 = 0; i2 < l; ++i2) {
              IndexSet ei =
                  mpos.shift(-i2).union_with(mpos.shift(l - i2)).intersect(range);
              auto bs = cv.blocks_from_positions(ei);
              auto& dst = piece_blocks[static_cast<size_t>(i2)];
              dst.insert(dst.end(), bs.begin(), bs.end());
            }
          }
          int count = 0;
          for (auto& pb : piece_blocks) {
            BlockSet piece = BlockSet::validate(comp.rank(), std::move(pb), false);
            if (piece.is_empty()) continue;
            out.pieces.push_back(PseudoArithPiece{std::move(piece), eta});
            ++count;
          }
          out.interval_piece_counts.push_back(count);
          out.generator_lengths.push_back(static_cast<int>(l));
        }
        out.cover_info = std::move(cover);
      }
    }
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

SegmentOrder initial_segment_check(const BlockSet& e0, const BlockSet& e1) {
  auto eta_of = [](const BlockSet& e) {
    std::vector<GroupElement> diffs;
    try {
      diffs = diff_set(e);
    } catch (const TooSmall&) {
      throw NotPseudoArithmetic("set has fewer than two elements");
    }
    if (diffs.size() != 1) throw NotPseudoArithmetic();
    return diffs.front();
  };
  GroupElement h0 = eta_of(e0), h1 = eta_of(e1);
  if (!(h0 == h1)) throw DifferentEta();
  GroupElement zero = GroupElement::zero(e0.rank());
  auto min_of = [&](const BlockSet& e) {
    if (!e.has_min()) throw DifferentMin("set has no least element");
    return e.min_elem();
  };
  if (!(min_of(e0) == zero) || !(min_of(e1) == zero)) throw DifferentMin();

  bool f0 = e0.is_finite(), f1 = e1.is_finite();
  long long n0 = f0 ? e0.size_finite() : -1;
  long long n1 = f1 ? e1.size_finite() : -1;
  long long probe = 4000;
  long long upto = std::min(f0 ? n0 : probe, f1 ? n1 : probe);
  auto w0 = e0.enumerate_window(zero, static_cast<int>(upto));
  auto w1 = e1.enumerate_window(zero, static_cast<int>(upto));
  for (long long i = 0; i < upto; ++i)
    if (!(w0[static_cast<size_t>(i)] == w1[static_cast<size_t>(i)]))
      throw NotPseudoArithmetic("sets diverge before either ends");
  if (f0 && f1) {
    if (n0 == n1) return SegmentOrder::Equal;
    return n0 < n1 ? SegmentOrder::E0_prefix_of_E1 : SegmentOrder::E1_prefix_of_E0;
  }
  if (f0) return SegmentOrder::E0_prefix_of_E1;
  if (f1) return SegmentOrder::E1_prefix_of_E0;
  // Both infinite and equal over the probe window; structural comparison of
  // the remaining single-chain tails decides.
  if (!(w0.back() == w1.back())) throw NotPseudoArithmetic("sets diverge");
  return SegmentOrder::Equal;
}

}  // namespace oag
