#include "oag/groups.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace oag {

bool IntegerLikeGroup::contains(const GroupElement& x) const {
  if (x.rank() != rank) throw RankMismatch();
  for (int j = lead + 1; j < rank; ++j)
    if (x.coord(j) != 0) return false;
  return is_integer(x.coord(lead) / step);
}

GroupElement floor_g(const IntegerLikeGroup& g, const GroupElement& a) {
  if (a.rank() != g.rank) throw RankMismatch();
  std::vector<Rational> c(a.coords());
  Int n = floor_int(c[g.lead] / g.step);
  bool exact = c[g.lead] == Rational(n) * g.step;
  if (exact) {
    // When the lead coordinate sits on the lattice, the lower-significance
    // tail decides which side of the lattice point a lies on.
    bool tail_negative = false;
    for (int j = g.lead + 1; j < g.rank; ++j) {
      if (a.coord(j) != 0) {
        tail_negative = a.coord(j) < 0;
        break;
      }
    }
    if (tail_negative) --n;
  }
  c[g.lead] = Rational(n) * g.step;
  for (int j = g.lead + 1; j < g.rank; ++j) c[j] = Rational(0);
  return GroupElement(std::move(c));
}

GroupElement frac_g(const IntegerLikeGroup& g, const GroupElement& a) {
  return a - floor_g(g, a);
}

IntegerLikeGroup build_group(const std::vector<PseudoArithPiece>& pieces) {
  if (pieces.empty()) throw Error("build_group needs at least one piece");
  int rank = pieces.front().set.rank();
  GroupElement zero = GroupElement::zero(rank);

  int lead = pieces.front().eta.leading_index();
  for (const auto& p : pieces) {
    if (!p.set.has_min()) throw NotNormalized("piece has no least element");
    if (!(p.set.min_elem() == zero)) throw NotNormalized();
    if (p.eta.leading_index() != lead)
      throw IncompatibleEtas("steps " + pieces.front().eta.str() + " and " + p.eta.str());
    for (int j = lead + 1; j < rank; ++j)
      if (p.eta.coord(j) != 0)
        throw NotAxisAligned("step " + p.eta.str() + " has coordinates below its class");
    Rational q;
    if (!try_rational_ratio(pieces.front().eta, p.eta, q))
      throw IncompatibleEtas("steps are not rationally dependent");
  }

  // Common refinement: gcd of the steps and of every base offset at the
  // lead coordinate (pieces may sit on shifted copies of the lattice line).
  Rational step(0);
  for (const auto& p : pieces) {
    step = rational_gcd(step, p.eta.coord(lead));
    for (const auto& b : p.set.blocks()) {
      step = rational_gcd(step, b.base().coord(lead));
      for (int j = 1; j <= b.m(); ++j) step = rational_gcd(step, b.prefix(j).coord(lead));
    }
  }
  IntegerLikeGroup g{rank, lead, step};

  // Exact containment: every block of every piece walks the lattice.
  for (const auto& p : pieces)
    for (const auto& b : p.set.blocks()) {
      if (!g.contains(b.base()))
        throw NotLatticeAligned("piece base " + b.base().str() + " escapes the group");
      for (const auto& letter : b.pattern())
        if (!g.contains(letter))
          throw NotLatticeAligned("piece step " + letter.str() + " escapes the group");
    }
  return g;
}

CheckReport integer_like_check(const IntegerLikeGroup& g, int samples, unsigned long long seed) {
  CheckReport rep;
  rep.samples = samples;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 8);
  auto rand_elem = [&] {
    std::vector<Rational> c(g.rank);
    for (int i = 0; i < g.rank; ++i) c[i] = Rational(num(rng), den(rng));
    return GroupElement(std::move(c));
  };
  GroupElement eta = g.eta();
  GroupElement zero = GroupElement::zero(g.rank);
  for (int i = 0; i < samples; ++i) {
    GroupElement a = rand_elem();
    GroupElement b = floor_g(g, a);
    if (!g.contains(b)) rep.failures.push_back("floor escapes G at " + a.str());
    if (!(b <= a) || !(a < b + eta)) rep.failures.push_back("sandwich fails at " + a.str());
    // Uniqueness: the lattice neighbours violate the sandwich.
    if (b + eta <= a) rep.failures.push_back("floor not unique above at " + a.str());
    if (a < b) rep.failures.push_back("floor not unique below at " + a.str());
    if (!(floor_g(g, b) == b)) rep.failures.push_back("floor not idempotent on G");
    if (!(floor_g(g, a + eta) == b + eta)) rep.failures.push_back("floor not equivariant");
    GroupElement x = rand_elem(), y = rand_elem();
    GroupElement gx = floor_g(g, x), gy = floor_g(g, y);
    if (!g.contains(gx + gy)) rep.failures.push_back("closure fails");
    if (!g.contains(gx - gy)) rep.failures.push_back("closure fails under subtraction");
    // Minimality of eta among positive lattice points near 0.
    if (g.contains(x) && x > zero && x < eta)
      rep.failures.push_back("positive element below eta: " + x.str());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Terms and formulas

TermPtr FloorTerm::var() {
  auto t = std::make_shared<FloorTerm>();
  t->kind = Kind::Var;
  return t;
}
TermPtr FloorTerm::param_ref(const std::string& name) {
  auto t = std::make_shared<FloorTerm>();
  t->kind = Kind::Param;
  t->param = name;
  return t;
}
TermPtr FloorTerm::scaled(const Rational& q, TermPtr x) {
  auto t = std::make_shared<FloorTerm>();
  t->kind = Kind::Scale;
  t->scale = q;
  t->a = std::move(x);
  return t;
}
TermPtr FloorTerm::add(TermPtr x, TermPtr y) {
  auto t = std::make_shared<FloorTerm>();
  t->kind = Kind::Add;
  t->a = std::move(x);
  t->b = std::move(y);
  return t;
}
TermPtr FloorTerm::neg(TermPtr x) {
  auto t = std::make_shared<FloorTerm>();
  t->kind = Kind::Neg;
  t->a = std::move(x);
  return t;
}
TermPtr FloorTerm::floor_of(TermPtr x) {
  auto t = std::make_shared<FloorTerm>();
  t->kind = Kind::FloorG;
  t->a = std::move(x);
  return t;
}

FormulaPtr FloorFormula::conj(std::vector<FormulaPtr> cs) {
  auto f = std::make_shared<FloorFormula>();
  f->kind = Kind::And;
  f->children = std::move(cs);
  return f;
}
FormulaPtr FloorFormula::disj(std::vector<FormulaPtr> cs) {
  auto f = std::make_shared<FloorFormula>();
  f->kind = Kind::Or;
  f->children = std::move(cs);
  return f;
}
FormulaPtr FloorFormula::neg(FormulaPtr g) {
  auto f = std::make_shared<FloorFormula>();
  f->kind = Kind::Not;
  f->children = {std::move(g)};
  return f;
}
FormulaPtr FloorFormula::cmp(Rel r, TermPtr l, TermPtr rr) {
  auto f = std::make_shared<FloorFormula>();
  f->kind = Kind::Cmp;
  f->rel = r;
  f->lhs = std::move(l);
  f->rhs = std::move(rr);
  return f;
}
FormulaPtr FloorFormula::in_g(TermPtr t) {
  auto f = std::make_shared<FloorFormula>();
  f->kind = Kind::InG;
  f->lhs = std::move(t);
  return f;
}
FormulaPtr FloorFormula::verum() {
  auto f = std::make_shared<FloorFormula>();
  f->kind = Kind::True;
  return f;
}
FormulaPtr FloorFormula::falsum() {
  auto f = std::make_shared<FloorFormula>();
  f->kind = Kind::False;
  return f;
}

static GroupElement eval_term(const TermPtr& t, const GroupElement& x,
                              const std::map<std::string, GroupElement>& params,
                              const IntegerLikeGroup& g) {
  switch (t->kind) {
    case FloorTerm::Kind::Var:
      return x;
    case FloorTerm::Kind::Param: {
      auto it = params.find(t->param);
      if (it == params.end()) throw Error("unbound parameter " + t->param);
      return it->second;
    }
    case FloorTerm::Kind::Scale:
      return eval_term(t->a, x, params, g) * t->scale;
    case FloorTerm::Kind::Add:
      return eval_term(t->a, x, params, g) + eval_term(t->b, x, params, g);
    case FloorTerm::Kind::Neg:
      return -eval_term(t->a, x, params, g);
    case FloorTerm::Kind::FloorG:
      return floor_g(g, eval_term(t->a, x, params, g));
  }
  throw Error("bad term");
}

static bool eval_node(const FormulaPtr& f, const GroupElement& x,
                      const std::map<std::string, GroupElement>& params,
                      const IntegerLikeGroup& g) {
  switch (f->kind) {
    case FloorFormula::Kind::True:
      return true;
    case FloorFormula::Kind::False:
      return false;
    case FloorFormula::Kind::And:
      for (const auto& c : f->children)
        if (!eval_node(c, x, params, g)) return false;
      return true;
    case FloorFormula::Kind::Or:
      for (const auto& c : f->children)
        if (eval_node(c, x, params, g)) return true;
      return false;
    case FloorFormula::Kind::Not:
      return !eval_node(f->children[0], x, params, g);
    case FloorFormula::Kind::InG:
      return g.contains(eval_term(f->lhs, x, params, g));
    case FloorFormula::Kind::Cmp: {
      GroupElement l = eval_term(f->lhs, x, params, g);
      GroupElement r = eval_term(f->rhs, x, params, g);
      switch (f->rel) {
        case FloorFormula::Rel::LT:
          return l < r;
        case FloorFormula::Rel::LE:
          return l <= r;
        case FloorFormula::Rel::EQ:
          return l == r;
      }
    }
  }
  throw Error("bad formula");
}

bool eval_formula(const DefiningFormula& f, const GroupElement& x, const IntegerLikeGroup& g) {
  return eval_node(f.body, x, f.params, g);
}

// S-expression output: (defparams (c "(1, 0)") ...) followed by the body.
static void term_sexpr(const TermPtr& t, std::ostringstream& os) {
  switch (t->kind) {
    case FloorTerm::Kind::Var:
      os << "x";
      return;
    case FloorTerm::Kind::Param:
      os << "(param " << t->param << ")";
      return;
    case FloorTerm::Kind::Scale:
      os << "(scale " << to_string(t->scale) << " ";
      term_sexpr(t->a, os);
      os << ")";
      return;
    case FloorTerm::Kind::Add:
      os << "(add ";
      term_sexpr(t->a, os);
      os << " ";
      term_sexpr(t->b, os);
      os << ")";
      return;
    case FloorTerm::Kind::Neg:
      os << "(neg ";
      term_sexpr(t->a, os);
      os << ")";
      return;
    case FloorTerm::Kind::FloorG:
      os << "(floor-g ";
      term_sexpr(t->a, os);
      os << ")";
      return;
  }
}

static void formula_sexpr(const FormulaPtr& f, std::ostringstream& os) {
  switch (f->kind) {
    case FloorFormula::Kind::True:
      os << "true";
      return;
    case FloorFormula::Kind::False:
      os << "false";
      return;
    case FloorFormula::Kind::And:
    case FloorFormula::Kind::Or: {
      os << (f->kind == FloorFormula::Kind::And ? "(and" : "(or");
      for (const auto& c : f->children) {
        os << " ";
        formula_sexpr(c, os);
      }
      os << ")";
      return;
    }
    case FloorFormula::Kind::Not:
      os << "(not ";
      formula_sexpr(f->children[0], os);
      os << ")";
      return;
    case FloorFormula::Kind::InG:
      os << "(in-G ";
      term_sexpr(f->lhs, os);
      os << ")";
      return;
    case FloorFormula::Kind::Cmp: {
      const char* op = f->rel == FloorFormula::Rel::LT   ? "lt"
                       : f->rel == FloorFormula::Rel::LE ? "le"
                                                         : "eq";
      os << "(" << op << " ";
      term_sexpr(f->lhs, os);
      os << " ";
      term_sexpr(f->rhs, os);
      os << ")";
      return;
    }
  }
}

std::string DefiningFormula::to_sexpr() const {
  std::ostringstream os;
  if (!params.empty()) {
    os << "(defparams";
    for (const auto& [name, val] : params) os << " (" << name << " \"" << val.str() << "\")";
    os << ")\n";
  }
  formula_sexpr(body, os);
  return os.str();
}

// --- S-expression parsing ---------------------------------------------------

namespace {

struct SexprParser {
  const std::string& s;
  size_t i = 0;
  explicit SexprParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  char peek() {
    skip_ws();
    if (i >= s.size()) throw SyntaxError(0, static_cast<int>(i), "unexpected end of input");
    return s[i];
  }
  void expect(char c) {
    if (peek() != c)
      throw SyntaxError(0, static_cast<int>(i), std::string("expected '") + c + "'");
    ++i;
  }
  std::string atom() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && !isspace(static_cast<unsigned char>(s[i])) && s[i] != '(' &&
           s[i] != ')')
      ++i;
    if (start == i) throw SyntaxError(0, static_cast<int>(i), "expected atom");
    return s.substr(start, i - start);
  }
  std::string quoted() {
    skip_ws();
    expect('"');
    size_t start = i;
    while (i < s.size() && s[i] != '"') ++i;
    if (i >= s.size()) throw SyntaxError(0, static_cast<int>(i), "unterminated string");
    std::string out = s.substr(start, i - start);
    ++i;
    return out;
  }
  bool at_end() {
    skip_ws();
    return i >= s.size();
  }

  TermPtr parse_term() {
    if (peek() != '(') {
      std::string a = atom();
      if (a == "x") return FloorTerm::var();
      throw SyntaxError(0, static_cast<int>(i), "unknown term atom '" + a + "'");
    }
    expect('(');
    std::string head = atom();
    TermPtr out;
    if (head == "param") {
      out = FloorTerm::param_ref(atom());
    } else if (head == "scale") {
      Rational q = parse_rational(atom());
      out = FloorTerm::scaled(q, parse_term());
    } else if (head == "add") {
      TermPtr a = parse_term();
      out = FloorTerm::add(a, parse_term());
    } else if (head == "neg") {
      out = FloorTerm::neg(parse_term());
    } else if (head == "floor-g") {
      out = FloorTerm::floor_of(parse_term());
    } else {
      throw SyntaxError(0, static_cast<int>(i), "unknown term head '" + head + "'");
    }
    expect(')');
    return out;
  }

  FormulaPtr parse_formula() {
    if (peek() != '(') {
      std::string a = atom();
      if (a == "true") return FloorFormula::verum();
      if (a == "false") return FloorFormula::falsum();
      throw SyntaxError(0, static_cast<int>(i), "unknown formula atom '" + a + "'");
    }
    expect('(');
    std::string head = atom();
    FormulaPtr out;
    if (head == "and" || head == "or") {
      std::vector<FormulaPtr> cs;
      while (peek() != ')') cs.push_back(parse_formula());
      out = head == "and" ? FloorFormula::conj(std::move(cs))
                          : FloorFormula::disj(std::move(cs));
    } else if (head == "not") {
      out = FloorFormula::neg(parse_formula());
    } else if (head == "in-G") {
      out = FloorFormula::in_g(parse_term());
    } else if (head == "lt" || head == "le" || head == "eq") {
      auto rel = head == "lt"   ? FloorFormula::Rel::LT
                 : head == "le" ? FloorFormula::Rel::LE
                                : FloorFormula::Rel::EQ;
      TermPtr l = parse_term();
      out = FloorFormula::cmp(rel, l, parse_term());
    } else {
      throw SyntaxError(0, static_cast<int>(i), "unknown formula head '" + head + "'");
    }
    expect(')');
    return out;
  }
};

}  // namespace

DefiningFormula DefiningFormula::parse_sexpr(const std::string& text, int rank) {
  DefiningFormula out;
  SexprParser p(text);
  if (p.peek() == '(') {
    size_t save = p.i;
    p.expect('(');
    std::string head = p.atom();
    if (head == "defparams") {
      while (p.peek() != ')') {
        p.expect('(');
        std::string name = p.atom();
        std::string val = p.quoted();
        GroupElement e = GroupElement::parse(val);
        if (e.rank() != rank) throw RankMismatch("parameter rank");
        out.params.emplace(name, e);
        p.expect(')');
      }
      p.expect(')');
    } else {
      p.i = save;
    }
  }
  out.body = p.parse_formula();
  if (!p.at_end()) throw SyntaxError(0, static_cast<int>(p.i), "trailing input");
  return out;
}

// ---------------------------------------------------------------------------
// Formula emission

DefiningFormula emit_formula(const BlockSet& d, const IntegerLikeGroup& g) {
  DefiningFormula out;
  if (d.is_empty()) {
    out.body = FloorFormula::falsum();
    return out;
  }
  Decomposition dec = pseudo_arith_decomp(d);
  int pidx = 0;
  auto fresh = [&](const GroupElement& v) {
    std::string name = "c" + std::to_string(pidx++);
    out.params.emplace(name, v);
    return FloorTerm::param_ref(name);
  };

  // Galaxy cuts: the congruence clause x - b in s*G does not pin the
  // coordinates above the lattice class, so a block unbounded within its
  // galaxy needs a separator against the neighbouring chains.  The midpoint
  // of two anchor elements of consecutive chains lies strictly between the
  // chains (their prefixes at the first differing coordinate are constant).
  auto chains = chain_partition(d);
  std::vector<GroupElement> anchors;
  for (const auto& ch : chains) {
    const Block& b = d.blocks()[ch.first_block];
    anchors.push_back(b.element(b.anchor_index()));
  }
  auto chain_of_element = [&](const GroupElement& x) {
    auto loc = d.locate(x);
    for (size_t t = 0; t < chains.size(); ++t)
      if (loc->first >= chains[t].first_block && loc->first <= chains[t].last_block)
        return static_cast<int>(t);
    throw Error("element escaped its chain");
  };
  auto cut_above = [&](int chain) -> std::optional<GroupElement> {
    if (chain + 1 >= static_cast<int>(chains.size())) return std::nullopt;
    return (anchors[chain] + anchors[chain + 1]) * Rational(1, 2);
  };
  auto cut_below = [&](int chain) -> std::optional<GroupElement> {
    if (chain == 0) return std::nullopt;
    return (anchors[chain - 1] + anchors[chain]) * Rational(1, 2);
  };

  TermPtr x = FloorTerm::var();
  std::vector<FormulaPtr> clauses;
  for (const auto& p : dec.points)
    clauses.push_back(FloorFormula::cmp(FloorFormula::Rel::EQ, x, fresh(p)));

  for (const auto& piece : dec.pieces) {
    const GroupElement& eta_p = piece.eta;
    Rational s;
    if (!try_rational_ratio(g.eta(), eta_p, s) || !is_integer(s) || s <= 0)
      throw NotDecomposable("piece step " + eta_p.str() + " is not a lattice multiple");

    std::vector<FormulaPtr> conj;
    for (const auto& blk : piece.set.blocks()) {
      // One clause per block line: (x - b)/s in G plus bounds that keep the
      // clause inside the block's galaxy.
      std::vector<FormulaPtr> sub;
      GroupElement b0 = blk.has_min() ? blk.min_elem() : blk.element(blk.anchor_index());
      TermPtr shifted = FloorTerm::add(x, FloorTerm::neg(fresh(b0)));
      sub.push_back(FloorFormula::in_g(FloorTerm::scaled(Rational(1) / s, shifted)));
      int chain = chain_of_element(b0);
      if (blk.has_min())
        sub.push_back(FloorFormula::cmp(FloorFormula::Rel::LE, fresh(blk.min_elem()), x));
      else if (auto c = cut_below(chain))
        sub.push_back(FloorFormula::cmp(FloorFormula::Rel::LT, fresh(*c), x));
      if (blk.has_max())
        sub.push_back(FloorFormula::cmp(FloorFormula::Rel::LE, x, fresh(blk.max_elem())));
      else if (auto c = cut_above(chain))
        sub.push_back(FloorFormula::cmp(FloorFormula::Rel::LT, x, fresh(*c)));
      conj.push_back(FloorFormula::conj(std::move(sub)));
    }
    if (conj.empty()) continue;
    clauses.push_back(conj.size() == 1 ? conj.front() : FloorFormula::disj(std::move(conj)));
  }
  if (clauses.empty())
    out.body = FloorFormula::falsum();
  else
    out.body = clauses.size() == 1 ? clauses.front() : FloorFormula::disj(std::move(clauses));
  return out;
}

}  // namespace oag
