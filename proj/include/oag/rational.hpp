#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "oag/errors.hpp"

namespace oag {

// All arithmetic in the library is exact.  Rationals are arbitrary-precision
// numerator/denominator pairs; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

// Greatest integer n with n <= q.
inline Int floor_int(const Rational& q) {
  Int n = num(q) / den(q);
  if (num(q) < 0 && n * den(q) != num(q)) --n;
  return n;
}

inline Int ceil_int(const Rational& q) { return -floor_int(-q); }

// gcd on rationals: the largest d with q1, q2 in d*Z.  gcd(a/b, c/d) =
// gcd(a*d, c*b) / (b*d) reduced.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a == 0) return b < 0 ? Rational(-b) : b;
  if (b == 0) return a < 0 ? Rational(-a) : a;
  Int n = gcd(num(a) * den(b), num(b) * den(a));
  Int d = den(a) * den(b);
  Rational r(n, d);
  return r < 0 ? Rational(-r) : r;
}

// Parses "p", "p/q", or "-p/q".  Throws SyntaxError on malformed input.
Rational parse_rational(const std::string& text);

inline std::string to_string(const Rational& q) {
  std::string s = num(q).str();
  if (den(q) != 1) s += "/" + den(q).str();
  return s;
}

}  // namespace oag
