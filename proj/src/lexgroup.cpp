#include "oag/lexgroup.hpp"

#include <sstream>

namespace oag {

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw SyntaxError(0, 0, "empty rational");
  auto ok_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = t.find('/');
  if (slash == std::string::npos) {
    if (!ok_int(t)) throw SyntaxError(0, 0, "malformed rational '" + text + "'");
    return Rational(Int(t));
  }
  std::string n = t.substr(0, slash), d = t.substr(slash + 1);
  if (!ok_int(n) || !ok_int(d) || Int(d) == 0)
    throw SyntaxError(0, 0, "malformed rational '" + text + "'");
  return Rational(Int(n), Int(d));
}

GroupElement GroupElement::unit(int rank, int i, const Rational& q) {
  std::vector<Rational> c(rank);
  c[i] = q;
  return GroupElement(std::move(c));
}

bool GroupElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

int GroupElement::leading_index() const {
  for (int i = 0; i < rank(); ++i)
    if (coords_[i] != 0) return i;
  return -1;
}

static void check_rank(const GroupElement& x, const GroupElement& y) {
  if (x.rank() != y.rank())
    throw RankMismatch("rank mismatch: " + std::to_string(x.rank()) + " vs " +
                       std::to_string(y.rank()));
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
  check_rank(*this, o);
  std::vector<Rational> c(coords_);
  for (int i = 0; i < rank(); ++i) c[i] += o.coords_[i];
  return GroupElement(std::move(c));
}

GroupElement GroupElement::operator-(const GroupElement& o) const {
  check_rank(*this, o);
  std::vector<Rational> c(coords_);
  for (int i = 0; i < rank(); ++i) c[i] -= o.coords_[i];
  return GroupElement(std::move(c));
}

GroupElement GroupElement::operator-() const {
  std::vector<Rational> c(coords_);
  for (auto& v : c) v = -v;
  return GroupElement(std::move(c));
}

GroupElement GroupElement::operator*(const Rational& q) const {
  std::vector<Rational> c(coords_);
  for (auto& v : c) v *= q;
  return GroupElement(std::move(c));
}

std::strong_ordering GroupElement::operator<=>(const GroupElement& o) const {
  check_rank(*this, o);
  for (int i = 0; i < rank(); ++i) {
    if (coords_[i] < o.coords_[i]) return std::strong_ordering::less;
    if (coords_[i] > o.coords_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool GroupElement::operator==(const GroupElement& o) const {
  return (*this <=> o) == std::strong_ordering::equal;
}

std::string GroupElement::str() const {
  std::string s = "(";
  for (int i = 0; i < rank(); ++i) {
    if (i) s += ", ";
    s += to_string(coords_[i]);
  }
  return s + ")";
}

GroupElement GroupElement::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw SyntaxError(0, 0, "malformed element '" + text + "'");
  t = t.substr(1, t.size() - 2);
  std::vector<Rational> coords;
  std::stringstream ss(t);
  std::string part;
  while (std::getline(ss, part, ',')) coords.push_back(parse_rational(part));
  if (coords.empty()) throw SyntaxError(0, 0, "element needs at least one coordinate");
  return GroupElement(std::move(coords));
}

Cmp cmp(const GroupElement& x, const GroupElement& y) {
  auto c = x <=> y;
  if (c == std::strong_ordering::less) return Cmp::LT;
  if (c == std::strong_ordering::greater) return Cmp::GT;
  return Cmp::EQ;
}

ArchClass arch_class(const GroupElement& x) {
  if (!(x > GroupElement::zero(x.rank()))) throw NonPositive("arch_class requires x > 0");
  return ArchClass{x.leading_index()};
}

bool arch_ll(const GroupElement& x, const GroupElement& y) {
  GroupElement z = GroupElement::zero(x.rank());
  if (!(x > z) || !(y > z)) throw NonPositive("arch_ll requires positive arguments");
  return arch_class(x).leading > arch_class(y).leading;
}

bool try_rational_ratio(const GroupElement& x, const GroupElement& y, Rational& out) {
  if (x.rank() != y.rank()) throw RankMismatch();
  int lead = x.leading_index();
  if (lead < 0) throw NonPositive("rational_ratio requires x != 0");
  Rational q = y.coord(lead) / x.coord(lead);
  for (int i = 0; i < x.rank(); ++i)
    if (y.coord(i) != q * x.coord(i)) return false;
  out = q;
  return true;
}

Rational rational_ratio(const GroupElement& x, const GroupElement& y) {
  Rational q;
  if (!try_rational_ratio(x, y, q))
    throw NotRationallyDependent(y.str() + " is not a rational multiple of " + x.str());
  return q;
}

}  // namespace oag
