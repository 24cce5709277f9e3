#pragma once

#include <compare>
#include <string>
#include <vector>

#include "oag/rational.hpp"

namespace oag {

// A point of the rank-r lexicographically ordered rational group Q^r.
// Coordinate 0 is the most significant.  Addition is coordinatewise and the
// order is lexicographic, which makes <Q^r; +, <> a divisible ordered
// Abelian group.  Values are immutable once built.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  static GroupElement zero(int rank) { return GroupElement(std::vector<Rational>(rank)); }
  // Unit vector at coordinate i scaled by q.
  static GroupElement unit(int rank, int i, const Rational& q = Rational(1));

  int rank() const { return static_cast<int>(coords_.size()); }
  const Rational& coord(int i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  // Index of the first nonzero coordinate; -1 for the zero element.
  int leading_index() const;

  GroupElement operator+(const GroupElement& o) const;
  GroupElement operator-(const GroupElement& o) const;
  GroupElement operator-() const;
  GroupElement operator*(const Rational& q) const;

  std::strong_ordering operator<=>(const GroupElement& o) const;
  bool operator==(const GroupElement& o) const;

  // Textual form "(a/b, c/d, ...)".
  std::string str() const;
  static GroupElement parse(const std::string& text);

 private:
  std::vector<Rational> coords_;
};

inline GroupElement operator*(const Rational& q, const GroupElement& x) { return x * q; }

enum class Cmp { LT, EQ, GT };
Cmp cmp(const GroupElement& x, const GroupElement& y);

inline GroupElement add(const GroupElement& x, const GroupElement& y) { return x + y; }
inline GroupElement scalar_mul(const Rational& q, const GroupElement& x) { return x * q; }

// An Archimedean class of a positive element, identified by the index of its
// leading coordinate.  Classes are REVERSE-ordered by index: a smaller
// leading index means a larger class (the element dominates).
struct ArchClass {
  int leading;
  bool operator==(const ArchClass& o) const = default;
  // Class order: [x] < [y] iff every multiple of x stays below y.
  bool operator<(const ArchClass& o) const { return leading > o.leading; }
};

// Archimedean class of x; requires x > 0.
ArchClass arch_class(const GroupElement& x);

// x << y: x is infinitesimal relative to y (n*x < y for every n).
// Requires x, y > 0.
bool arch_ll(const GroupElement& x, const GroupElement& y);

// The rational q with y = q*x, when one exists; x must be nonzero.
// Throws NotRationallyDependent when no single q works for all coordinates.
Rational rational_ratio(const GroupElement& x, const GroupElement& y);

// q with y = q*x returned through an output flag instead of a throw.
bool try_rational_ratio(const GroupElement& x, const GroupElement& y, Rational& out);

}  // namespace oag
