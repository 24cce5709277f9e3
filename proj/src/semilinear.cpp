#include "oag/semilinear.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace oag {

long long mod_floor(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

long long lcm_ll(long long a, long long b) {
  long long g = std::gcd(a, b);
  long long v = (a / g) * b;
  if (v > (1LL << 40)) throw Error("period overflow in lcm");
  return v;
}

bool IndexSet::member_raw(long long k) const {
  if (k > hi_) return hi_res_.count(mod_floor(k, period_)) != 0;
  if (k < lo_) return lo_res_.count(mod_floor(k, period_)) != 0;
  return middle_.count(k) != 0;
}

bool IndexSet::member(long long k) const { return member_raw(k); }

// Minimal d | p such that the residue set is invariant under +d mod p.
static long long minimal_shift_period(const std::set<long long>& res, long long p) {
  if (res.empty()) return 1;
  for (long long d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (long long r : res)
      if (!res.count((r + d) % p)) {
        ok = false;
        break;
      }
    if (ok) return d;
  }
  return p;
}

void IndexSet::canonicalize() {
  // Minimal common period of both tails.
  long long pr = minimal_shift_period(hi_res_, period_);
  long long pl = minimal_shift_period(lo_res_, period_);
  long long p_star = lcm_ll(pr, pl);
  std::set<long long> hi2, lo2;
  for (long long r : hi_res_) hi2.insert(r % p_star);
  for (long long r : lo_res_) lo2.insert(r % p_star);

  auto right_rule = [&](long long k) { return hi2.count(mod_floor(k, p_star)) != 0; };
  auto left_rule = [&](long long k) { return lo2.count(mod_floor(k, p_star)) != 0; };

  // Tight hi: the largest point where membership deviates from the upper
  // periodic rule.  Deviations can only occur at or below hi_ (window) or
  // below lo_ (where the two rules may disagree on whole residue classes).
  std::optional<long long> v_hi, v_lo;
  for (long long k = hi_; k >= lo_; --k)
    if (member_raw(k) != right_rule(k)) {
      v_hi = k;
      break;
    }
  if (!v_hi) {
    for (long long k = lo_ - 1; k >= lo_ - period_; --k)
      if (member_raw(k) != right_rule(k)) {
        v_hi = k;
        break;
      }
    // A deviation below the window repeats periodically; the largest one is
    // within one period of lo_.
  }
  for (long long k = lo_; k <= hi_; ++k)
    if (member_raw(k) != left_rule(k)) {
      v_lo = k;
      break;
    }
  if (!v_lo) {
    for (long long k = hi_ + 1; k <= hi_ + period_; ++k)
      if (member_raw(k) != left_rule(k)) {
        v_lo = k;
        break;
      }
  }

  std::set<long long> mid;
  long long nlo, nhi;
  if (!v_hi && !v_lo) {
    // Fully periodic set; pin the window at 0.
    nlo = nhi = 0;
    if (member_raw(0)) mid.insert(0);
  } else if (v_hi && v_lo) {
    nhi = *v_hi;
    nlo = *v_lo;
    for (long long k = nlo; k <= nhi; ++k)
      if (member_raw(k)) mid.insert(k);
  } else {
    // One rule holds everywhere; then both must (the set is fully periodic
    // and the two residue patterns coincide).  Deviation lists disagreeing:
    // fall back to the window we already have.
    nlo = v_lo ? *v_lo : lo_;
    nhi = v_hi ? *v_hi : hi_;
    if (nlo > hi_ || nhi < lo_) {
      nlo = lo_;
      nhi = hi_;
    }
    for (long long k = nlo; k <= nhi; ++k)
      if (member_raw(k)) mid.insert(k);
  }

  period_ = p_star;
  lo_ = nlo;
  hi_ = nhi;
  middle_ = std::move(mid);
  hi_res_ = std::move(hi2);
  lo_res_ = std::move(lo2);
}

IndexSet IndexSet::empty() { return IndexSet(); }

IndexSet IndexSet::all() {
  IndexSet s;
  s.hi_res_ = {0};
  s.lo_res_ = {0};
  s.middle_ = {0};
  return s;
}

IndexSet IndexSet::singleton(long long k) { return finite({k}); }

IndexSet IndexSet::finite(const std::set<long long>& elems) {
  IndexSet s;
  if (elems.empty()) return s;
  s.lo_ = *elems.begin();
  s.hi_ = *elems.rbegin();
  s.middle_ = elems;
  return s;
}

IndexSet IndexSet::progression(long long r, long long p) {
  if (p <= 0) throw Error("progression period must be positive");
  IndexSet s;
  s.period_ = p;
  s.hi_res_ = {mod_floor(r, p)};
  s.lo_res_ = s.hi_res_;
  s.lo_ = s.hi_ = 0;
  if (mod_floor(0, p) == mod_floor(r, p)) s.middle_ = {0};
  s.canonicalize();
  return s;
}

IndexSet IndexSet::half_line_ge(long long t) {
  IndexSet s;
  s.hi_res_ = {0};
  s.period_ = 1;
  s.lo_ = s.hi_ = t;
  s.middle_ = {t};
  s.canonicalize();
  return s;
}

IndexSet IndexSet::half_line_le(long long t) {
  IndexSet s;
  s.lo_res_ = {0};
  s.period_ = 1;
  s.lo_ = s.hi_ = t;
  s.middle_ = {t};
  s.canonicalize();
  return s;
}

IndexSet IndexSet::range(long long a, long long b) {
  std::set<long long> m;
  for (long long k = a; k <= b; ++k) m.insert(k);
  return finite(m);
}

IndexSet IndexSet::from_parts(long long period, long long lo, long long hi,
                              const std::set<long long>& middle,
                              const std::set<long long>& lo_residues,
                              const std::set<long long>& hi_residues) {
  if (period <= 0) throw Error("period must be positive");
  IndexSet s;
  s.period_ = period;
  s.lo_ = lo;
  s.hi_ = hi;
  for (long long k : middle) {
    if (k < lo || k > hi) throw Error("middle element outside threshold window");
    s.middle_.insert(k);
  }
  for (long long r : lo_residues) s.lo_res_.insert(mod_floor(r, period));
  for (long long r : hi_residues) s.hi_res_.insert(mod_floor(r, period));
  s.canonicalize();
  return s;
}

IndexSet IndexSet::from_predicate(const std::function<bool(long long)>& pred, long long period,
                                  long long lo_hint, long long hi_hint) {
  if (period <= 0) throw Error("period must be positive");
  IndexSet s;
  s.period_ = period;
  s.lo_ = lo_hint;
  s.hi_ = hi_hint;
  if (s.lo_ > s.hi_) std::swap(s.lo_, s.hi_);
  for (long long k = s.lo_; k <= s.hi_; ++k)
    if (pred(k)) s.middle_.insert(k);
  for (long long k = s.hi_ + 1; k <= s.hi_ + period; ++k)
    if (pred(k)) s.hi_res_.insert(mod_floor(k, period));
  for (long long k = s.lo_ - period; k < s.lo_; ++k)
    if (pred(k)) s.lo_res_.insert(mod_floor(k, period));
  s.canonicalize();
  return s;
}

bool IndexSet::is_empty() const { return middle_.empty() && hi_res_.empty() && lo_res_.empty(); }

long long IndexSet::size_finite() const {
  if (!lo_res_.empty()) throw UnboundedBelow();
  if (!hi_res_.empty()) throw UnboundedAbove();
  return static_cast<long long>(middle_.size());
}

long long IndexSet::min_element() const {
  if (is_empty()) throw EmptySet();
  if (!lo_res_.empty()) throw UnboundedBelow();
  if (!middle_.empty()) return *middle_.begin();
  for (long long k = hi_ + 1; k <= hi_ + period_; ++k)
    if (hi_res_.count(mod_floor(k, period_))) return k;
  throw EmptySet();
}

long long IndexSet::max_element() const {
  if (is_empty()) throw EmptySet();
  if (!hi_res_.empty()) throw UnboundedAbove();
  if (!middle_.empty()) return *middle_.rbegin();
  for (long long k = lo_ - 1; k >= lo_ - period_; --k)
    if (lo_res_.count(mod_floor(k, period_))) return k;
  throw EmptySet();
}

std::optional<long long> IndexSet::try_next(long long k) const {
  // Lower tail scan, capped at lo_.
  if (k < lo_ - 1 && !lo_res_.empty()) {
    long long stop = std::min(lo_ - 1, k + period_);
    for (long long x = k + 1; x <= stop; ++x)
      if (x < lo_ && lo_res_.count(mod_floor(x, period_))) return x;
  }
  // Middle.
  auto it = middle_.upper_bound(k);
  if (it != middle_.end()) return *it;
  // Upper tail.
  if (!hi_res_.empty()) {
    long long start = std::max(k, hi_) + 1;
    for (long long x = start; x <= start + period_; ++x)
      if (hi_res_.count(mod_floor(x, period_))) return x;
  }
  return std::nullopt;
}

long long IndexSet::next_in(long long k) const {
  auto r = try_next(k);
  if (!r) throw NoSuccessor("no element of the index set above " + std::to_string(k));
  return *r;
}

std::optional<long long> IndexSet::try_prev(long long k) const {
  if (k > hi_ + 1 && !hi_res_.empty()) {
    long long stop = std::max(hi_ + 1, k - period_);
    for (long long x = k - 1; x >= stop; --x)
      if (x > hi_ && hi_res_.count(mod_floor(x, period_))) return x;
  }
  auto it = middle_.lower_bound(k);
  if (it != middle_.begin()) {
    --it;
    return *it;
  }
  if (!lo_res_.empty()) {
    long long start = std::min(k, lo_) - 1;
    for (long long x = start; x >= start - period_; --x)
      if (lo_res_.count(mod_floor(x, period_))) return x;
  }
  return std::nullopt;
}

std::set<long long> IndexSet::gap_sizes() const {
  if (is_finite() && size_finite() < 2) throw TooSmall("gap_sizes needs at least two elements");
  std::set<long long> gaps;
  long long a = lo_ - 2 * period_, b = hi_ + 2 * period_;
  std::optional<long long> prev;
  // Start from the first element >= a (or the true minimum when bounded
  // below); every successive pair with left endpoint in the window is
  // genuine, and tail gaps outside the window repeat ones inside it.
  long long start = a - 1;
  for (auto cur = try_next(start); cur && *cur <= b; cur = try_next(*cur)) {
    if (prev) gaps.insert(*cur - *prev);
    prev = *cur;
  }
  if (prev) {
    auto nxt = try_next(*prev);
    if (nxt) gaps.insert(*nxt - *prev);
  }
  return gaps;
}

std::vector<long long> IndexSet::enumerate(long long from, int count) const {
  std::vector<long long> out;
  long long k = from - 1;
  for (int i = 0; i < count; ++i) {
    auto nx = try_next(k);
    if (!nx) break;
    out.push_back(*nx);
    k = *nx;
  }
  return out;
}

// Pointwise combination on a common period and window.
static IndexSet combine(const IndexSet& s, const IndexSet& t, const std::function<bool(bool, bool)>& op) {
  long long p = lcm_ll(s.period(), t.period());
  long long lo = std::min(s.lo_threshold(), t.lo_threshold());
  long long hi = std::max(s.hi_threshold(), t.hi_threshold());
  return IndexSet::from_predicate([&](long long k) { return op(s.member(k), t.member(k)); }, p, lo,
                                  hi);
}

IndexSet IndexSet::union_with(const IndexSet& o) const {
  return combine(*this, o, [](bool a, bool b) { return a || b; });
}

IndexSet IndexSet::intersect(const IndexSet& o) const {
  return combine(*this, o, [](bool a, bool b) { return a && b; });
}

IndexSet IndexSet::complement() const {
  IndexSet s = *this;
  std::set<long long> mid;
  for (long long k = lo_; k <= hi_; ++k)
    if (!middle_.count(k)) mid.insert(k);
  std::set<long long> hr, lr;
  for (long long r = 0; r < period_; ++r) {
    if (!hi_res_.count(r)) hr.insert(r);
    if (!lo_res_.count(r)) lr.insert(r);
  }
  s.middle_ = std::move(mid);
  s.hi_res_ = std::move(hr);
  s.lo_res_ = std::move(lr);
  s.canonicalize();
  return s;
}

IndexSet IndexSet::affine(long long a, long long b) const {
  if (a == 0) throw Error("affine map must have nonzero scale");
  long long aa = a < 0 ? -a : a;
  long long p = period_ * aa;
  if (p > (1LL << 40)) throw Error("period overflow in affine");
  long long i1 = a * lo_ + b, i2 = a * hi_ + b;
  long long lo = std::min(i1, i2) - p, hi = std::max(i1, i2) + p;
  return from_predicate(
      [&](long long k) {
        long long d = k - b;
        if (d % a != 0) return false;
        return member(d / a);
      },
      p, lo, hi);
}

IndexSet IndexSet::divide_exact(long long m, long long j) const {
  if (m <= 0) throw Error("divide_exact requires positive divisor");
  if (!subset_of(progression(j, m)))
    throw Error("divide_exact: set not contained in the progression");
  long long lo = (lo_ - j) / m - period_ - 2, hi = (hi_ - j) / m + period_ + 2;
  return from_predicate([&](long long k) { return member(m * k + j); }, period_, lo, hi);
}

static long long count_residue_range(long long a, long long b, long long r, long long p) {
  if (a > b) return 0;
  // #{x in [a,b] : x = r (mod p)}
  long long first = a + mod_floor(r - a, p);
  if (first > b) return 0;
  return (b - first) / p + 1;
}

long long IndexSet::count_range(long long a, long long b) const {
  if (a > b) return 0;
  long long total = 0;
  // Lower tail part: x < lo and x <= hi (the upper rule takes precedence on
  // the gap of an inverted window).
  long long t1 = std::min({b, lo_ - 1, hi_});
  for (long long r : lo_res_) total += count_residue_range(a, t1, r, period_);
  // Middle part
  long long m1 = std::max(a, lo_), m2 = std::min(b, hi_);
  if (m1 <= m2)
    total += static_cast<long long>(
        std::distance(middle_.lower_bound(m1), middle_.upper_bound(m2)));
  // Upper tail part: [max(a, hi+1), b]
  long long u0 = std::max(a, hi_ + 1);
  for (long long r : hi_res_) total += count_residue_range(u0, b, r, period_);
  return total;
}

bool IndexSet::operator==(const IndexSet& o) const {
  return period_ == o.period_ && lo_ == o.lo_ && hi_ == o.hi_ && middle_ == o.middle_ &&
         lo_res_ == o.lo_res_ && hi_res_ == o.hi_res_;
}

std::string IndexSet::str() const {
  std::ostringstream os;
  os << "{p=" << period_ << " lo=" << lo_ << " hi=" << hi_ << " mid={";
  bool first = true;
  for (long long k : middle_) {
    if (!first) os << ",";
    os << k;
    first = false;
  }
  os << "} loR={";
  first = true;
  for (long long r : lo_res_) {
    if (!first) os << ",";
    os << r;
    first = false;
  }
  os << "} hiR={";
  first = true;
  for (long long r : hi_res_) {
    if (!first) os << ",";
    os << r;
    first = false;
  }
  os << "}}";
  return os.str();
}

}  // namespace oag
