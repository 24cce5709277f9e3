#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "oag/structure.hpp"

namespace oag {

// An integer-like subgroup of the rank-r model:
//   G = { x : x_j in Q for j < lead, x_lead in step*Z, x_j = 0 for j > lead }
// with least positive element eta = step at the lead coordinate.  G is
// discrete, unbounded, and every point of the model has a unique floor
// b in G with b <= x < b + eta.
struct IntegerLikeGroup {
  int rank;
  int lead;
  Rational step;  // > 0

  GroupElement eta() const { return GroupElement::unit(rank, lead, step); }
  bool contains(const GroupElement& x) const;
};

GroupElement floor_g(const IntegerLikeGroup& g, const GroupElement& a);
GroupElement frac_g(const IntegerLikeGroup& g, const GroupElement& a);

// Builds the common integer-like group for a family of pseudo-arithmetic
// pieces normalized to least element 0.  The step is the rational gcd of
// the pieces' steps (refined by base offsets at the lead coordinate when
// pieces sit on shifted lattice lines), so every piece embeds exactly.
IntegerLikeGroup build_group(const std::vector<PseudoArithPiece>& pieces);

struct CheckReport {
  int samples = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Property run: floor sandwich and uniqueness on random points, closure on
// random pairs, and minimality of eta among sampled positive elements.
CheckReport integer_like_check(const IntegerLikeGroup& g, int samples, unsigned long long seed = 0);

// ---------------------------------------------------------------------------
// Quantifier-free formulas over {+, <, rational scaling, floor_G, in-G} in
// one free variable.

class FloorTerm;
using TermPtr = std::shared_ptr<const FloorTerm>;

class FloorTerm {
 public:
  enum class Kind { Var, Param, Scale, Add, Neg, FloorG };
  Kind kind;
  std::string param;  // Param
  Rational scale;     // Scale
  TermPtr a, b;

  static TermPtr var();
  static TermPtr param_ref(const std::string& name);
  static TermPtr scaled(const Rational& q, TermPtr t);
  static TermPtr add(TermPtr x, TermPtr y);
  static TermPtr neg(TermPtr t);
  static TermPtr floor_of(TermPtr t);
};

class FloorFormula;
using FormulaPtr = std::shared_ptr<const FloorFormula>;

class FloorFormula {
 public:
  enum class Kind { And, Or, Not, Cmp, InG, True, False };
  enum class Rel { LT, LE, EQ };

  Kind kind;
  Rel rel = Rel::LT;
  TermPtr lhs, rhs;
  std::vector<FormulaPtr> children;

  static FormulaPtr conj(std::vector<FormulaPtr> cs);
  static FormulaPtr disj(std::vector<FormulaPtr> cs);
  static FormulaPtr neg(FormulaPtr f);
  static FormulaPtr cmp(Rel r, TermPtr l, TermPtr rr);
  static FormulaPtr in_g(TermPtr t);
  static FormulaPtr verum();
  static FormulaPtr falsum();
};

// A closed formula in one variable together with its parameter values.
struct DefiningFormula {
  FormulaPtr body;
  std::map<std::string, GroupElement> params;

  std::string to_sexpr() const;
  static DefiningFormula parse_sexpr(const std::string& text, int rank);
};

bool eval_formula(const DefiningFormula& f, const GroupElement& x, const IntegerLikeGroup& g);

// Emits a quantifier-free formula defining d over <R, +, <, G>: each
// pseudo-arithmetic piece becomes a lattice-congruence clause with interval
// bounds, isolated points become equalities.  The decomposition must be
// compatible with g (every piece lattice-aligned in g).
DefiningFormula emit_formula(const BlockSet& d, const IntegerLikeGroup& g);

}  // namespace oag
