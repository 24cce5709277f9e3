#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "oag/setrep.hpp"

namespace oag {

// Expression language for the CLI: set literals combined by the calculus
// operators, e.g.  diff(load("d.json")), iter(load("d.json"), 2),
// union(load("a.json"), load("b.json")), psigma(load("d.json"), "[(0,1)]").
struct SetExpr {
  enum class Op {
    Load,      // load("file.json")
    Points,    // points("(0,1)", "(0,2)", ...)
    Diff,      // diff(e)
    Iter,      // iter(e, n)
    Union,     // union(e1, e2)
    Translate, // translate(e, "(0,1/2)")
    Scale,     // scale(e, "3/2")
    Reflect,   // reflect(e)
    Psigma,    // psigma(e, "[(0,1),(0,2)]")
    Decompose, // decompose(e)
    Chains,    // chains(e)
    Cstar,     // cstar(e)
    Uniformize,// uniformize(e)
    Archsplit, // archsplit(e)
    Period,    // period(e)
    Defing,    // defing(e)
  };
  Op op;
  std::string arg;                               // textual argument, if any
  int n = 0;                                     // numeric argument (Iter)
  std::vector<std::unique_ptr<SetExpr>> kids;
};

// Parses the expression language; throws SyntaxError with position info.
std::unique_ptr<SetExpr> parse_expr(const std::string& text);

// Round-trip printer (parse(print(e)) reproduces e).
std::string print_expr(const SetExpr& e);

struct EvalOptions {
  int rank = 2;
  unsigned long long seed = 0;
  int jobs = 1;
};

// Evaluates the expression; set-valued results are reported as blockset
// JSON, terminal verbs produce their own reports.
nlohmann::json eval_expr(const SetExpr& e, const EvalOptions& opts);

// Parses a word literal "[(0,1),(0,2)]".
std::vector<GroupElement> parse_word(const std::string& text);

}  // namespace oag
