#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oag/errors.hpp"

namespace oag {

// A one-variable semilinear (ultimately periodic) subset of Z: exactly the
// sets definable in <Z; +, <>.  The representation is two-sided: a periodic
// upper tail above hi_threshold, a periodic lower tail below lo_threshold,
// and an explicit middle in between.
//
// Membership is decided in that order: k > hi -> upper residues, k < lo ->
// lower residues, otherwise the middle set.  Canonical form has the minimal
// period and tight thresholds (the outermost points where membership
// deviates from the periodic rule); a fully periodic set canonicalizes to
// lo = hi = 0.  Equality of sets coincides with equality of canonical forms.
class IndexSet {
 public:
  IndexSet() = default;  // empty set

  static IndexSet empty();
  static IndexSet all();
  static IndexSet singleton(long long k);
  static IndexSet finite(const std::set<long long>& elems);
  // {k : k = r (mod p)}
  static IndexSet progression(long long r, long long p);
  static IndexSet half_line_ge(long long t);
  static IndexSet half_line_le(long long t);
  static IndexSet range(long long a, long long b);  // [a, b]

  // Assembles a set from explicit parts and canonicalizes.  residues are
  // taken mod period; middle entries outside [lo, hi] are rejected.
  static IndexSet from_parts(long long period, long long lo, long long hi,
                             const std::set<long long>& middle,
                             const std::set<long long>& lo_residues,
                             const std::set<long long>& hi_residues);

  // Builds {k : pred(k)} for a predicate that is p-periodic above hi_hint
  // and below lo_hint for some p dividing `period`.  The caller guarantees
  // the hints; the result is exact under that promise.
  static IndexSet from_predicate(const std::function<bool(long long)>& pred, long long period,
                                 long long lo_hint, long long hi_hint);

  bool member(long long k) const;

  bool is_empty() const;
  bool is_finite() const { return hi_res_.empty() && lo_res_.empty(); }
  bool bounded_below() const { return lo_res_.empty(); }
  bool bounded_above() const { return hi_res_.empty(); }
  // Number of elements; throws UnboundedBelow/Above if infinite.
  long long size_finite() const;

  long long min_element() const;  // throws EmptySet, UnboundedBelow
  long long max_element() const;  // throws EmptySet, UnboundedAbove

  // Least element strictly above k; throws NoSuccessor when none.
  long long next_in(long long k) const;
  std::optional<long long> try_next(long long k) const;
  // Greatest element strictly below k.
  std::optional<long long> try_prev(long long k) const;

  // The set of differences between successive elements; always finite.
  // Requires at least two elements.
  std::set<long long> gap_sizes() const;

  // First `count` elements >= from, ascending (shorter if the set exhausts).
  std::vector<long long> enumerate(long long from, int count) const;

  IndexSet union_with(const IndexSet& o) const;
  IndexSet intersect(const IndexSet& o) const;
  IndexSet complement() const;
  IndexSet set_minus(const IndexSet& o) const { return intersect(o.complement()); }

  bool subset_of(const IndexSet& o) const { return set_minus(o).is_empty(); }

  // Image {a*k + b : k in this}; a must be nonzero.
  IndexSet affine(long long a, long long b) const;
  IndexSet shift(long long b) const { return affine(1, b); }
  IndexSet negate() const { return affine(-1, 0); }
  // Preimage-style exact division: {(k - j)/m : k in this}, requiring that
  // every element is = j (mod m).
  IndexSet divide_exact(long long m, long long j) const;

  // Number of elements in [a, b].
  long long count_range(long long a, long long b) const;

  bool operator==(const IndexSet& o) const;

  long long period() const { return period_; }
  long long lo_threshold() const { return lo_; }
  long long hi_threshold() const { return hi_; }
  const std::set<long long>& middle() const { return middle_; }
  const std::set<long long>& lo_residues() const { return lo_res_; }
  const std::set<long long>& hi_residues() const { return hi_res_; }

  std::string str() const;

 private:
  long long period_ = 1;
  long long lo_ = 0, hi_ = 0;
  std::set<long long> middle_;           // subset of [lo_, hi_]
  std::set<long long> lo_res_, hi_res_;  // subsets of [0, period_)

  void canonicalize();
  bool member_raw(long long k) const;
};

long long mod_floor(long long a, long long p);
long long lcm_ll(long long a, long long b);

}  // namespace oag
