#include "oag/expr.hpp"

#include <map>

#include "oag/groups.hpp"
#include "oag/io.hpp"
#include "oag/structure.hpp"

namespace oag {

std::vector<GroupElement> parse_word(const std::string& text) {
  std::vector<GroupElement> out;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '[') throw SyntaxError(1, static_cast<int>(i), "expected '['");
  ++i;
  skip();
  while (i < text.size() && text[i] != ']') {
    if (text[i] != '(') throw SyntaxError(1, static_cast<int>(i), "expected '('");
    size_t start = i;
    int depth = 0;
    while (i < text.size()) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')' && --depth == 0) {
        ++i;
        break;
      }
      ++i;
    }
    out.push_back(GroupElement::parse(text.substr(start, i - start)));
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      skip();
    }
  }
  if (i >= text.size()) throw SyntaxError(1, static_cast<int>(i), "expected ']'");
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  explicit Parser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& msg) {
    int line = 1, col = 1;
    for (size_t k = 0; k < i && k < s.size(); ++k) {
      if (s[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(line, col, msg);
  }

  void skip() {
    while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip();
    size_t start = i;
    while (i < s.size() && (isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    if (start == i) fail("expected identifier");
    return s.substr(start, i - start);
  }
  std::string string_lit() {
    skip();
    if (i >= s.size() || s[i] != '"') fail("expected string literal");
    ++i;
    size_t start = i;
    while (i < s.size() && s[i] != '"') ++i;
    if (i >= s.size()) fail("unterminated string");
    std::string out = s.substr(start, i - start);
    ++i;
    return out;
  }
  int number() {
    skip();
    size_t start = i;
    if (i < s.size() && s[i] == '-') ++i;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected number");
    return std::stoi(s.substr(start, i - start));
  }

  std::unique_ptr<SetExpr> parse() {
    auto e = parse_node();
    skip();
    if (i != s.size()) fail("trailing input");
    return e;
  }

  std::unique_ptr<SetExpr> parse_node() {
    std::string name = ident();
    static const std::map<std::string, SetExpr::Op> ops = {
        {"load", SetExpr::Op::Load},           {"points", SetExpr::Op::Points},
        {"diff", SetExpr::Op::Diff},           {"iter", SetExpr::Op::Iter},
        {"union", SetExpr::Op::Union},         {"translate", SetExpr::Op::Translate},
        {"scale", SetExpr::Op::Scale},         {"reflect", SetExpr::Op::Reflect},
        {"psigma", SetExpr::Op::Psigma},       {"decompose", SetExpr::Op::Decompose},
        {"chains", SetExpr::Op::Chains},       {"cstar", SetExpr::Op::Cstar},
        {"uniformize", SetExpr::Op::Uniformize}, {"archsplit", SetExpr::Op::Archsplit},
        {"period", SetExpr::Op::Period},       {"defing", SetExpr::Op::Defing},
    };
    auto it = ops.find(name);
    if (it == ops.end()) fail("unknown operator '" + name + "'");
    auto node = std::make_unique<SetExpr>();
    node->op = it->second;
    expect('(');
    switch (node->op) {
      case SetExpr::Op::Load:
        node->arg = string_lit();
        break;
      case SetExpr::Op::Points: {
        node->arg = string_lit();
        while (eat(',')) node->arg += ";" + string_lit();
        break;
      }
      case SetExpr::Op::Iter:
        node->kids.push_back(parse_node());
        expect(',');
        node->n = number();
        break;
      case SetExpr::Op::Union:
        node->kids.push_back(parse_node());
        expect(',');
        node->kids.push_back(parse_node());
        break;
      case SetExpr::Op::Translate:
      case SetExpr::Op::Scale:
      case SetExpr::Op::Psigma:
        node->kids.push_back(parse_node());
        expect(',');
        node->arg = string_lit();
        break;
      default:
        node->kids.push_back(parse_node());
        break;
    }
    expect(')');
    return node;
  }
};

std::string quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::unique_ptr<SetExpr> parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string print_expr(const SetExpr& e) {
  static const std::map<SetExpr::Op, std::string> names = {
      {SetExpr::Op::Load, "load"},           {SetExpr::Op::Points, "points"},
      {SetExpr::Op::Diff, "diff"},           {SetExpr::Op::Iter, "iter"},
      {SetExpr::Op::Union, "union"},         {SetExpr::Op::Translate, "translate"},
      {SetExpr::Op::Scale, "scale"},         {SetExpr::Op::Reflect, "reflect"},
      {SetExpr::Op::Psigma, "psigma"},       {SetExpr::Op::Decompose, "decompose"},
      {SetExpr::Op::Chains, "chains"},       {SetExpr::Op::Cstar, "cstar"},
      {SetExpr::Op::Uniformize, "uniformize"}, {SetExpr::Op::Archsplit, "archsplit"},
      {SetExpr::Op::Period, "period"},       {SetExpr::Op::Defing, "defing"},
  };
  std::string out = names.at(e.op) + "(";
  switch (e.op) {
    case SetExpr::Op::Load:
      out += quote(e.arg);
      break;
    case SetExpr::Op::Points: {
      size_t start = 0;
      bool first = true;
      while (start <= e.arg.size()) {
        size_t sep = e.arg.find(';', start);
        std::string part =
            sep == std::string::npos ? e.arg.substr(start) : e.arg.substr(start, sep - start);
        if (!first) out += ", ";
        out += quote(part);
        first = false;
        if (sep == std::string::npos) break;
        start = sep + 1;
      }
      break;
    }
    case SetExpr::Op::Iter:
      out += print_expr(*e.kids[0]) + ", " + std::to_string(e.n);
      break;
    case SetExpr::Op::Union:
      out += print_expr(*e.kids[0]) + ", " + print_expr(*e.kids[1]);
      break;
    case SetExpr::Op::Translate:
    case SetExpr::Op::Scale:
    case SetExpr::Op::Psigma:
      out += print_expr(*e.kids[0]) + ", " + quote(e.arg);
      break;
    default:
      out += print_expr(*e.kids[0]);
      break;
  }
  return out + ")";
}

namespace {

BlockSet eval_set(const SetExpr& e, const EvalOptions& opts);

json report_for(const SetExpr& e, const EvalOptions& opts) {
  switch (e.op) {
    case SetExpr::Op::Decompose: {
      BlockSet d = eval_set(*e.kids[0], opts);
      Decomposition dec = pseudo_arith_decomp(d);
      json j = decomposition_to_json(dec);
      j["certificates"] = {{"mu", dec.cover_info.mu},
                           {"generators", dec.generator_lengths}};
      return j;
    }
    case SetExpr::Op::Chains: {
      BlockSet d = eval_set(*e.kids[0], opts);
      json j;
      j["chains"] = json::array();
      for (const auto& ch : chain_partition(d)) {
        ChainView v(d, ch);
        json cj;
        cj["blocks"] = {ch.first_block, ch.last_block};
        cj["left"] = ch.left_bounded ? "bounded" : "unbounded";
        cj["right"] = ch.right_bounded ? "bounded" : "unbounded";
        json word;
        const auto& w = v.word();
        if (w.has_left()) {
          word["left_tail"] = json::array();
          for (int id : *w.left_tail) word["left_tail"].push_back(w.alphabet[id].str());
        }
        word["middle"] = json::array();
        for (int id : w.middle) word["middle"].push_back(w.alphabet[id].str());
        if (w.has_right()) {
          word["right_tail"] = json::array();
          for (int id : *w.right_tail) word["right_tail"].push_back(w.alphabet[id].str());
        }
        cj["word"] = std::move(word);
        j["chains"].push_back(std::move(cj));
      }
      return j;
    }
    case SetExpr::Op::Cstar: {
      BlockSet d = eval_set(*e.kids[0], opts);
      json j;
      j["classes"] = json::array();
      for (const auto& c : c_star_set(d)) j["classes"].push_back(c.leading);
      return j;
    }
    case SetExpr::Op::Uniformize: {
      BlockSet d = eval_set(*e.kids[0], opts);
      json j;
      j["pieces"] = json::array();
      for (const auto& u : uniformize(d)) {
        json pj;
        pj["N"] = u.uniform_bound;
        pj["set"] = blockset_to_json(u.piece);
        j["pieces"].push_back(std::move(pj));
      }
      j["certificates"] = {{"N", j["pieces"].size()}};
      return j;
    }
    case SetExpr::Op::Archsplit: {
      BlockSet d = eval_set(*e.kids[0], opts);
      json j;
      j["pieces"] = json::array();
      for (const auto& p : arch_partition(d)) j["pieces"].push_back(blockset_to_json(p));
      return j;
    }
    case SetExpr::Op::Period: {
      BlockSet d = eval_set(*e.kids[0], opts);
      json j;
      j["chains"] = json::array();
      for (const auto& ch : chain_partition(d)) {
        ChainView v(d, ch);
        json cj;
        if (v.word().has_right()) {
          int cap = factor_count(v.word(), 1);
          int k = 1;
          while (true) {
            int f1 = factor_count(v.word(), k + 1);
            if (f1 == cap) break;
            cap = f1;
            ++k;
          }
          auto pr = detect_period(v.word(), cap);
          cj["right_period"] = pr.m;
          cj["offset"] = pr.offset;
        } else {
          cj["right_period"] = nullptr;
        }
        j["chains"].push_back(std::move(cj));
      }
      return j;
    }
    case SetExpr::Op::Defing: {
      BlockSet d = eval_set(*e.kids[0], opts);
      Decomposition dec = pseudo_arith_decomp(d);
      std::vector<PseudoArithPiece> normalized;
      for (const auto& p : dec.pieces) {
        BlockSet n = p.set.translate(-p.set.min_elem());
        normalized.push_back(PseudoArithPiece{std::move(n), p.eta});
      }
      json j;
      if (normalized.empty()) {
        j["formula"] = "false";
        return j;
      }
      IntegerLikeGroup g = build_group(normalized);
      DefiningFormula f = emit_formula(d, g);
      j["group"] = {{"lead", g.lead}, {"step", to_string(g.step)}};
      j["formula"] = f.to_sexpr();
      return j;
    }
    default:
      break;
  }
  json j;
  j["set"] = blockset_to_json(eval_set(e, opts));
  return j;
}

BlockSet eval_set(const SetExpr& e, const EvalOptions& opts) {
  switch (e.op) {
    case SetExpr::Op::Load:
      return load_blockset(e.arg);
    case SetExpr::Op::Points: {
      std::vector<GroupElement> pts;
      size_t start = 0;
      while (start <= e.arg.size()) {
        size_t sep = e.arg.find(';', start);
        std::string part =
            sep == std::string::npos ? e.arg.substr(start) : e.arg.substr(start, sep - start);
        pts.push_back(GroupElement::parse(part));
        if (sep == std::string::npos) break;
        start = sep + 1;
      }
      if (pts.empty()) throw Error("points() needs at least one element");
      return BlockSet::from_points(pts.front().rank(), pts);
    }
    case SetExpr::Op::Diff: {
      BlockSet d = eval_set(*e.kids[0], opts);
      return BlockSet::from_points(d.rank(), diff_set(d));
    }
    case SetExpr::Op::Iter:
      return iter_diff(eval_set(*e.kids[0], opts), e.n);
    case SetExpr::Op::Union: {
      BlockSet a = eval_set(*e.kids[0], opts);
      return a.union_with(eval_set(*e.kids[1], opts));
    }
    case SetExpr::Op::Translate:
      return eval_set(*e.kids[0], opts).translate(GroupElement::parse(e.arg));
    case SetExpr::Op::Scale:
      return eval_set(*e.kids[0], opts).scale(parse_rational(e.arg));
    case SetExpr::Op::Reflect:
      return eval_set(*e.kids[0], opts).reflect();
    case SetExpr::Op::Psigma:
      return p_sigma(eval_set(*e.kids[0], opts), parse_word(e.arg));
    default:
      throw Error("expression does not evaluate to a set; use eval reports");
  }
}

}  // namespace

json eval_expr(const SetExpr& e, const EvalOptions& opts) {
  switch (e.op) {
    case SetExpr::Op::Decompose:
    case SetExpr::Op::Chains:
    case SetExpr::Op::Cstar:
    case SetExpr::Op::Uniformize:
    case SetExpr::Op::Archsplit:
    case SetExpr::Op::Period:
    case SetExpr::Op::Defing:
      return report_for(e, opts);
    case SetExpr::Op::Diff: {
      // Set-valued, but reported with the plain difference list as well.
      BlockSet d = eval_set(*e.kids[0], opts);
      auto diffs = diff_set(d);
      json j;
      j["diff"] = json::array();
      for (const auto& g : diffs) j["diff"].push_back(g.str());
      j["set"] = blockset_to_json(BlockSet::from_points(d.rank(), diffs));
      return j;
    }
    default: {
      json j;
      j["set"] = blockset_to_json(eval_set(e, opts));
      return j;
    }
  }
}

}  // namespace oag
