#pragma once

#include <optional>
#include <vector>

#include "oag/errors.hpp"
#include "oag/lexgroup.hpp"

namespace oag {

// Difference words over a finite alphabet of group elements.  Letters are
// stored as indices into the alphabet so the combinatorial routines below
// work on plain integer sequences.
//
// A DifferenceWord is eventually periodic on each infinite side: an optional
// left tail repeated leftward, a finite middle, and an optional right tail
// repeated rightward.  Reading positions are 0, 1, 2, ... over middle then
// right tail; the left tail occupies negative positions.
struct DifferenceWord {
  std::optional<std::vector<int>> left_tail;
  std::vector<int> middle;
  std::optional<std::vector<int>> right_tail;
  std::vector<GroupElement> alphabet;

  bool has_right() const { return right_tail.has_value() && !right_tail->empty(); }
  bool has_left() const { return left_tail.has_value() && !left_tail->empty(); }

  // Letter id at position t (t may be negative when a left tail exists).
  int at(long long t) const;
  // Whether position t carries a letter.
  bool in_domain(long long t) const;
};

// Number of length-k factors that occur infinitely often (reading
// rightward).  Requires an infinite right side.
int factor_count(const DifferenceWord& w, int k);

struct PeriodResult {
  int m;           // eventual period
  long long offset;  // least N with w[j+m] = w[j] for all j >= N
};

// Eventual-period detection via the unique-extension map on infinitely
// recurring factors: at the first k with f(k) = f(k+1) every recurring
// k-factor has a unique recurring extension; following extensions and
// dropping first letters walks a cycle whose length is an eventual period
// bounded by max_k f(k).  Throws BoundViolated(k) when some f(k) > M.
PeriodResult detect_period(const DifferenceWord& w, int M);

// Primitive root of a finite word: the shortest tau with tau^t = sigma^s
// for some s, t; |tau| divides |sigma| and tau^(|sigma|/|tau|) = sigma.
std::vector<int> primitive_generator(const std::vector<int>& sigma);

// Minimal eventual period by direct search (used as an oracle and by the
// chain machinery to normalize tails).
int minimal_period_of_tail(const std::vector<int>& tail);

bool cyclically_equal(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace oag
