#include "oracles.hpp"

#include <algorithm>

namespace oag::testing {

std::set<GroupElement> brute_diffs(const BlockSet& d, int count) {
  auto w = d.enumerate_window(d.min_elem(), count);
  std::set<GroupElement> out;
  for (size_t i = 0; i + 1 < w.size(); ++i) out.insert(w[i + 1] - w[i]);
  return out;
}

long long required_window(const BlockSet& d) {
  long long total = 0;
  for (const auto& b : d.blocks()) {
    const IndexSet& k = b.indices();
    long long L = lcm_ll(k.period(), b.m());
    total += k.count_range(k.lo_threshold() - 2 * L - k.period(),
                           k.hi_threshold() + 2 * L + k.period()) +
             2;
  }
  return total;
}

namespace {
int word_at(const std::vector<int>& prefix, const std::vector<int>& tail, long long i) {
  if (i < static_cast<long long>(prefix.size())) return prefix[static_cast<size_t>(i)];
  return tail[static_cast<size_t>((i - prefix.size()) % tail.size())];
}
}  // namespace

int brute_min_period(const std::vector<int>& prefix, const std::vector<int>& tail) {
  long long horizon = static_cast<long long>(prefix.size()) + 4LL * tail.size();
  for (int m = 1; m <= static_cast<int>(tail.size()); ++m) {
    // m is an eventual period iff it holds from some point on; on an
    // ultimately periodic word it is enough that it holds on the tail.
    bool ok = true;
    for (long long i = prefix.size(); i + m <= horizon + m && ok; ++i)
      ok = word_at(prefix, tail, i) == word_at(prefix, tail, i + m);
    if (ok) return m;
  }
  return static_cast<int>(tail.size());
}

long long brute_period_offset(const std::vector<int>& prefix, const std::vector<int>& tail,
                              int m) {
  long long horizon = static_cast<long long>(prefix.size()) + 4LL * tail.size() + m;
  long long last = -1;
  for (long long i = 0; i + m <= horizon; ++i)
    if (word_at(prefix, tail, i) != word_at(prefix, tail, i + m)) last = i;
  return last + 1;
}

std::vector<int> brute_primitive_root(const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  for (int d = 1; d <= n; ++d) {
    // Minimal tau with tau^t = w^s: compare the two concatenations up to
    // the common length lcm(d, n).
    std::vector<int> tau(w.begin(), w.begin() + d);
    long long common = static_cast<long long>(d) / std::gcd(d, n) * n;
    bool ok = true;
    for (long long i = 0; i < common && ok; ++i)
      ok = tau[static_cast<size_t>(i % d)] == w[static_cast<size_t>(i % n)];
    if (ok) return tau;
  }
  return w;
}

int brute_factor_count(const std::vector<int>& tail, int k) {
  std::set<std::vector<int>> factors;
  int L = static_cast<int>(tail.size());
  for (int s = 0; s < L; ++s) {
    std::vector<int> f(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) f[static_cast<size_t>(i)] = tail[(s + i) % L];
    factors.insert(std::move(f));
  }
  return static_cast<int>(factors.size());
}

Rational rand_rational(Rng& rng, int bound, int den) {
  std::uniform_int_distribution<int> n(-bound, bound), d(1, den);
  return Rational(n(rng), d(rng));
}

Rational rand_positive_rational(Rng& rng, int bound, int den) {
  std::uniform_int_distribution<int> n(1, bound), d(1, den);
  return Rational(n(rng), d(rng));
}

IndexSet rand_index_set(Rng& rng, bool bounded_below) {
  std::uniform_int_distribution<int> period(1, 6), small(-8, 8), coin(0, 1), cnt(0, 4);
  long long p = period(rng);
  std::set<long long> hi_res, lo_res, middle;
  std::uniform_int_distribution<long long> res(0, p - 1);
  int nh = cnt(rng);
  for (int i = 0; i < nh; ++i) hi_res.insert(res(rng));
  if (!bounded_below) {
    int nl = cnt(rng);
    for (int i = 0; i < nl; ++i) lo_res.insert(res(rng));
  }
  long long lo = small(rng), hi = lo + std::uniform_int_distribution<long long>(0, 10)(rng);
  int nm = cnt(rng);
  std::uniform_int_distribution<long long> mid(lo, hi);
  for (int i = 0; i < nm; ++i) middle.insert(mid(rng));
  return IndexSet::from_parts(p, lo, hi, middle, lo_res, hi_res);
}

GroupElement elem2(const Rational& a, const Rational& b) {
  return GroupElement(std::vector<Rational>{a, b});
}

BlockSet make_set(int rank, const GroupElement& base, std::vector<GroupElement> pattern,
                  const IndexSet& k, bool nonneg) {
  std::vector<Block> blocks;
  blocks.push_back(Block(base, std::move(pattern), k));
  return BlockSet::validate(rank, std::move(blocks), nonneg);
}

BlockSet rand_blockset(Rng& rng, int max_blocks, int max_pattern, bool closable) {
  std::uniform_int_distribution<int> nblocks(1, max_blocks), plen(1, max_pattern), coin(0, 1);
  std::uniform_int_distribution<int> ksize(1, 30);
  int n = nblocks(rng);
  std::vector<Block> blocks;
  // Stack galaxies upward along coordinate 0; within one galaxy the pattern
  // moves coordinate 1 only, so separation holds whenever the coordinate-0
  // offsets strictly increase galaxy by galaxy.
  Rational floor0(0);
  for (int b = 0; b < n; ++b) {
    Rational base0 = floor0;
    Rational base1 = rand_positive_rational(rng, 8, 8);
    std::vector<GroupElement> pattern;
    int m = plen(rng);
    for (int i = 0; i < m; ++i)
      pattern.push_back(elem2(Rational(0), rand_positive_rational(rng, 8, 8)));
    // Enumeration windows can only close every threshold when no galaxy
    // before the last is infinite.
    bool unbounded = coin(rng) == 1 && (!closable || b + 1 == n);
    IndexSet k;
    if (unbounded) {
      // A sparse upper tail with a small explicit middle.
      long long p = std::uniform_int_distribution<long long>(1, 5)(rng);
      std::set<long long> res;
      std::uniform_int_distribution<long long> rr(0, p - 1);
      int nr = std::uniform_int_distribution<int>(1, static_cast<int>(p))(rng);
      for (int i = 0; i < nr; ++i) res.insert(rr(rng));
      std::set<long long> middle;
      long long hi = std::uniform_int_distribution<long long>(0, 8)(rng);
      std::uniform_int_distribution<long long> mid(0, hi);
      for (int i = 0, c = std::uniform_int_distribution<int>(0, 5)(rng); i < c; ++i)
        middle.insert(mid(rng));
      k = IndexSet::from_parts(p, 0, hi, middle, {}, res);
    } else {
      std::set<long long> els;
      std::uniform_int_distribution<long long> e(0, 40);
      int c = ksize(rng);
      for (int i = 0; i < c; ++i) els.insert(e(rng));
      k = IndexSet::finite(els);
    }
    if (k.is_empty()) k = IndexSet::singleton(0);
    blocks.push_back(Block(elem2(base0, base1), std::move(pattern), k));
    floor0 += Rational(1);
  }
  return BlockSet::validate(2, std::move(blocks), false);
}

BlockSet pseudo_arith(const GroupElement& eta, long long n) {
  IndexSet k = n < 0 ? IndexSet::half_line_ge(0) : IndexSet::range(0, n - 1);
  std::vector<Block> blocks;
  blocks.push_back(Block(GroupElement::zero(eta.rank()), {eta}, k));
  return BlockSet::validate(eta.rank(), std::move(blocks), false);
}

RandomWord rand_word(Rng& rng, int max_prefix, int max_period, int max_alpha) {
  std::uniform_int_distribution<int> pl(0, max_prefix), tl(1, max_period), al(1, max_alpha);
  int alpha = al(rng);
  std::uniform_int_distribution<int> letter(0, alpha - 1);
  RandomWord out;
  int np = pl(rng), nt = tl(rng);
  for (int i = 0; i < np; ++i) out.prefix.push_back(letter(rng));
  for (int i = 0; i < nt; ++i) out.tail.push_back(letter(rng));
  out.word.middle = out.prefix;
  out.word.right_tail = out.tail;
  int used = 0;
  for (int v : out.prefix) used = std::max(used, v + 1);
  for (int v : out.tail) used = std::max(used, v + 1);
  for (int i = 0; i < used; ++i)
    out.word.alphabet.push_back(GroupElement::unit(2, 1, Rational(i + 1)));
  return out;
}

StdForm rand_stdform(Rng& rng, int max_families) {
  std::uniform_int_distribution<int> cnt(0, max_families), den(2, 8);
  std::vector<PointFamily> pts;
  std::vector<IntervalFamily> ivs;
  int np = cnt(rng);
  for (int i = 0; i < np; ++i) {
    int d = den(rng);
    std::uniform_int_distribution<int> num(0, d - 1);
    pts.push_back(PointFamily{rand_index_set(rng), Rational(num(rng), d)});
  }
  int ni = cnt(rng);
  for (int i = 0; i < ni; ++i) {
    int d = den(rng);
    std::uniform_int_distribution<int> num(0, d - 1);
    int a = num(rng);
    std::uniform_int_distribution<int> num2(a + 1, d);
    ivs.push_back(IntervalFamily{rand_index_set(rng), Rational(a, d), Rational(num2(rng), d)});
  }
  return StdForm(std::move(pts), std::move(ivs));
}

}  // namespace oag::testing
