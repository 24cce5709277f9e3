#pragma once

#include <utility>
#include <vector>

#include "oag/rational.hpp"
#include "oag/semilinear.hpp"
#include "oag/setrep.hpp"

namespace oag {

// Normal form for one-variable sets over the standard rank-1 model with the
// integer lattice: finite unions of translated point families
// U_{w in W} {w + lambda} and open interval families
// U_{w in W} (w + lo, w + hi), with W semilinear.
struct PointFamily {
  IndexSet w;
  Rational lambda;  // in [0, 1)
};

struct IntervalFamily {
  IndexSet w;
  Rational lo, hi;  // 0 <= lo < hi <= 1
};

class StdForm {
 public:
  StdForm() = default;
  StdForm(std::vector<PointFamily> points, std::vector<IntervalFamily> intervals);

  static StdForm empty() { return StdForm(); }
  static StdForm whole_line();

  const std::vector<PointFamily>& point_families() const { return points_; }
  const std::vector<IntervalFamily>& interval_families() const { return intervals_; }
  bool is_empty() const { return points_.empty() && intervals_.empty(); }

  bool member(const Rational& x) const;

  StdForm union_with(const StdForm& o) const;
  StdForm intersect(const StdForm& o) const;
  StdForm complement() const;

  // (discrete part, open part): point families and interval families.
  std::pair<StdForm, StdForm> split() const;

  bool operator==(const StdForm& o) const;

 private:
  std::vector<PointFamily> points_;
  std::vector<IntervalFamily> intervals_;
  void normalize();
};

// Conversions between the two set representations.  std_to_blockset
// requires a purely discrete form (NotDiscrete otherwise) and produces a
// rank-1 BlockSet; blockset_to_std accepts any rank-1 BlockSet
// (NotLatticeAligned for other ranks).
BlockSet std_to_blockset(const StdForm& x);
StdForm blockset_to_std(const BlockSet& d);

}  // namespace oag
