#include "seqtop/formula.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "seqtop/errors.hpp"

namespace seqtop {

Formula Formula::truth(bool b) {
  Formula f;
  f.kind = b ? FKind::True : FKind::False;
  return f;
}

Formula Formula::ge(int v, std::int64_t c) {
  if (c <= 0) return truth(true);
  Formula f;
  f.kind = FKind::GeC;
  f.var = v;
  f.c = c;
  return f;
}

Formula Formula::le(int v, std::int64_t c) {
  if (c < 0) return truth(false);
  Formula f;
  f.kind = FKind::LeC;
  f.var = v;
  f.c = c;
  return f;
}

Formula Formula::diff_ge(int a, int b, std::int64_t c) {
  if (a == b) return truth(0 >= c);
  Formula f;
  f.kind = FKind::DiffGe;
  f.var = a;
  f.var2 = b;
  f.c = c;
  return f;
}

Formula Formula::mod_eq(int v, std::uint32_t k, std::uint32_t r) {
  if (k == 0) throw PreconditionError("congruence with zero modulus");
  if (k == 1) return truth(true);
  Formula f;
  f.kind = FKind::ModEq;
  f.var = v;
  f.k = k;
  f.r = r % k;
  return f;
}

Formula Formula::conj(std::vector<Formula> kids) {
  std::vector<Formula> keep;
  for (auto& kid : kids) {
    if (kid.kind == FKind::False) return truth(false);
    if (kid.kind == FKind::True) continue;
    keep.push_back(std::move(kid));
  }
  if (keep.empty()) return truth(true);
  if (keep.size() == 1) return keep[0];
  Formula f;
  f.kind = FKind::And;
  f.kids = std::move(keep);
  return f;
}

Formula Formula::disj(std::vector<Formula> kids) {
  std::vector<Formula> keep;
  for (auto& kid : kids) {
    if (kid.kind == FKind::True) return truth(true);
    if (kid.kind == FKind::False) continue;
    keep.push_back(std::move(kid));
  }
  if (keep.empty()) return truth(false);
  if (keep.size() == 1) return keep[0];
  Formula f;
  f.kind = FKind::Or;
  f.kids = std::move(keep);
  return f;
}

Formula Formula::neg(Formula f) {
  if (f.kind == FKind::True) return truth(false);
  if (f.kind == FKind::False) return truth(true);
  if (f.kind == FKind::Not) return f.kids[0];
  Formula n;
  n.kind = FKind::Not;
  n.kids.push_back(std::move(f));
  return n;
}

bool eval_formula(const Formula& f, std::uint64_t v0, std::uint64_t v1) {
  auto val = [&](int slot) -> std::int64_t {
    return static_cast<std::int64_t>(slot == 0 ? v0 : v1);
  };
  switch (f.kind) {
    case FKind::True:
      return true;
    case FKind::False:
      return false;
    case FKind::And:
      for (const auto& kid : f.kids)
        if (!eval_formula(kid, v0, v1)) return false;
      return true;
    case FKind::Or:
      for (const auto& kid : f.kids)
        if (eval_formula(kid, v0, v1)) return true;
      return false;
    case FKind::Not:
      return !eval_formula(f.kids[0], v0, v1);
    case FKind::GeC:
      return val(f.var) >= f.c;
    case FKind::LeC:
      return val(f.var) <= f.c;
    case FKind::DiffGe:
      return val(f.var) - val(f.var2) >= f.c;
    case FKind::ModEq:
      return val(f.var) % f.k == f.r;
  }
  return false;
}

bool uses_var(const Formula& f, int slot) {
  switch (f.kind) {
    case FKind::True:
    case FKind::False:
      return false;
    case FKind::And:
    case FKind::Or:
    case FKind::Not:
      for (const auto& kid : f.kids)
        if (uses_var(kid, slot)) return true;
      return false;
    case FKind::GeC:
    case FKind::LeC:
    case FKind::ModEq:
      return f.var == slot;
    case FKind::DiffGe:
      return f.var == slot || f.var2 == slot;
  }
  return false;
}

FormulaScale formula_scale(const Formula& f) {
  FormulaScale s;
  switch (f.kind) {
    case FKind::And:
    case FKind::Or:
    case FKind::Not:
      for (const auto& kid : f.kids) s = join_scale(s, formula_scale(kid));
      break;
    case FKind::GeC:
    case FKind::LeC:
    case FKind::DiffGe:
      s.C = 1 + std::abs(f.c);
      break;
    case FKind::ModEq:
      s.K = f.k;
      break;
    default:
      break;
  }
  return s;
}

FormulaScale join_scale(FormulaScale a, FormulaScale b) {
  return FormulaScale{std::max(a.C, b.C), nat_lcm(a.K, b.K)};
}

std::uint64_t tail_threshold(const FormulaScale& s) {
  return 2 * static_cast<std::uint64_t>(s.C) + 3 * static_cast<std::uint64_t>(s.K) + 2;
}

std::uint64_t pair_bound(const FormulaScale& s) {
  return 3 * (static_cast<std::uint64_t>(s.C) + s.K + 1) + s.K;
}

std::uint64_t cube_bound(const FormulaScale& s) {
  // Extra headroom over the pair bound: chained difference atoms compose to
  // effective constants up to twice the per-formula maximum.
  return 4 * (static_cast<std::uint64_t>(s.C) + s.K + 1) + s.K;
}

Formula substitute(const Formula& f, int slot, std::uint64_t value) {
  auto v = static_cast<std::int64_t>(value);
  switch (f.kind) {
    case FKind::True:
    case FKind::False:
      return f;
    case FKind::And: {
      std::vector<Formula> kids;
      for (const auto& kid : f.kids) kids.push_back(substitute(kid, slot, value));
      return Formula::conj(std::move(kids));
    }
    case FKind::Or: {
      std::vector<Formula> kids;
      for (const auto& kid : f.kids) kids.push_back(substitute(kid, slot, value));
      return Formula::disj(std::move(kids));
    }
    case FKind::Not:
      return Formula::neg(substitute(f.kids[0], slot, value));
    case FKind::GeC:
      return f.var == slot ? Formula::truth(v >= f.c) : f;
    case FKind::LeC:
      return f.var == slot ? Formula::truth(v <= f.c) : f;
    case FKind::DiffGe:
      if (f.var == slot) return Formula::le(f.var2, v - f.c);
      if (f.var2 == slot) return Formula::ge(f.var, f.c + v);
      return f;
    case FKind::ModEq:
      return f.var == slot ? Formula::truth(value % f.k == f.r) : f;
  }
  return f;
}

Formula rename_var(const Formula& f, int from, int to) {
  switch (f.kind) {
    case FKind::True:
    case FKind::False:
      return f;
    case FKind::And: {
      std::vector<Formula> kids;
      for (const auto& kid : f.kids) kids.push_back(rename_var(kid, from, to));
      return Formula::conj(std::move(kids));
    }
    case FKind::Or: {
      std::vector<Formula> kids;
      for (const auto& kid : f.kids) kids.push_back(rename_var(kid, from, to));
      return Formula::disj(std::move(kids));
    }
    case FKind::Not:
      return Formula::neg(rename_var(f.kids[0], from, to));
    case FKind::GeC:
    case FKind::LeC:
    case FKind::ModEq: {
      Formula g = f;
      if (g.var == from) g.var = to;
      return g;
    }
    case FKind::DiffGe: {
      int a = f.var == from ? to : f.var;
      int b = f.var2 == from ? to : f.var2;
      return Formula::diff_ge(a, b, f.c);
    }
  }
  return f;
}

Formula swap_vars(const Formula& f) {
  auto flip = [](int v) { return v == 0 ? 1 : (v == 1 ? 0 : v); };
  switch (f.kind) {
    case FKind::True:
    case FKind::False:
      return f;
    case FKind::And: {
      std::vector<Formula> kids;
      for (const auto& kid : f.kids) kids.push_back(swap_vars(kid));
      return Formula::conj(std::move(kids));
    }
    case FKind::Or: {
      std::vector<Formula> kids;
      for (const auto& kid : f.kids) kids.push_back(swap_vars(kid));
      return Formula::disj(std::move(kids));
    }
    case FKind::Not:
      return Formula::neg(swap_vars(f.kids[0]));
    case FKind::GeC:
    case FKind::LeC:
    case FKind::ModEq: {
      Formula g = f;
      g.var = flip(g.var);
      return g;
    }
    case FKind::DiffGe:
      return Formula::diff_ge(flip(f.var), flip(f.var2), f.c);
  }
  return f;
}

NatSet compile_unary(const Formula& f, int slot) {
  if (uses_var(f, 1 - slot))
    throw PreconditionError("one-variable compilation of a two-variable predicate");
  FormulaScale s = formula_scale(f);
  auto T = static_cast<std::uint32_t>(s.C);
  std::uint32_t K = s.K;
  std::vector<std::uint8_t> sample(T + K);
  for (std::uint32_t v = 0; v < T + K; ++v) {
    bool b = slot == 0 ? eval_formula(f, v, 0) : eval_formula(f, 0, v);
    sample[v] = b ? 1 : 0;
  }
  return NatSet::from_samples(T, K, sample);
}

namespace {

// Shared sampling loop for the one-variable eliminations: decide the result
// pointwise in the free variable up to the tail threshold plus one period.
template <class Decide>
NatSet sample_free_var(const FormulaScale& s, Decide&& decide) {
  auto T = static_cast<std::uint32_t>(tail_threshold(s));
  std::uint32_t K = s.K;
  std::vector<std::uint8_t> sample(T + K);
  for (std::uint32_t v = 0; v < T + K; ++v) sample[v] = decide(v) ? 1 : 0;
  return NatSet::from_samples(T, K, sample);
}

}  // namespace

NatSet elim_exists(const Formula& f, int quantified) {
  FormulaScale s = formula_scale(f);
  // Any witness can be reduced below free + C + K by stepping down in whole
  // periods: all threshold and difference atoms are saturated above that.
  std::uint64_t slack = static_cast<std::uint64_t>(s.C) + s.K;
  return sample_free_var(s, [&](std::uint64_t nv) {
    for (std::uint64_t m = 0; m <= nv + slack; ++m) {
      bool hit = quantified == 0 ? eval_formula(f, m, nv) : eval_formula(f, nv, m);
      if (hit) return true;
    }
    return false;
  });
}

NatSet elim_forall(const Formula& f, int quantified) {
  return nat_complement(elim_exists(Formula::neg(f), quantified));
}

NatSet elim_eventually_all(const Formula& f, int quantified) {
  int fv = 1 - quantified;
  FormulaScale s = formula_scale(f);
  return sample_free_var(s, [&](std::uint64_t nv) {
    return nat_cofinite(compile_unary(substitute(f, fv, nv), quantified));
  });
}

NatSet elim_infinitely_often(const Formula& f, int quantified) {
  int fv = 1 - quantified;
  FormulaScale s = formula_scale(f);
  return sample_free_var(s, [&](std::uint64_t nv) {
    return nat_infinite(compile_unary(substitute(f, fv, nv), quantified));
  });
}

Formula formula_from_natset(const NatSet& s, int slot) {
  if (nat_empty(s)) return Formula::truth(false);
  if (nat_all(s)) return Formula::truth(true);
  std::vector<Formula> arms;
  for (std::uint32_t v = 0; v < s.T; ++v)
    if (s.head[v]) arms.push_back(Formula::conj({Formula::ge(slot, v), Formula::le(slot, v)}));
  for (std::uint32_t i = 0; i < s.K; ++i) {
    std::uint64_t v = s.T + i;
    std::uint32_t res = static_cast<std::uint32_t>(v % s.K);
    if (!s.cycle[res]) continue;
    if (s.K == 1)
      arms.push_back(Formula::ge(slot, s.T));
    else
      arms.push_back(Formula::conj({Formula::ge(slot, s.T), Formula::mod_eq(slot, s.K, res)}));
  }
  return Formula::disj(std::move(arms));
}

bool formulas_equal(const Formula& a, const Formula& b) {
  std::uint64_t bound = pair_bound(join_scale(formula_scale(a), formula_scale(b)));
  for (std::uint64_t m = 0; m < bound; ++m)
    for (std::uint64_t n = 0; n < bound; ++n)
      if (eval_formula(a, m, n) != eval_formula(b, m, n)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum Kind { Ident, Num, Op, End } kind = End;
  std::string text;
  size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  size_t i = 0;
  auto two = [&](char a, char b) {
    return i + 1 < src.size() && src[i] == a && src[i + 1] == b;
  };
  while (i < src.size()) {
    char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      t.kind = Token::Ident;
      t.text = src.substr(i, j - i);
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Token::Num;
      t.text = src.substr(i, j - i);
      i = j;
    } else if (two('>', '=') || two('<', '=') || two('=', '=') || two('!', '=')) {
      t.kind = Token::Op;
      t.text = src.substr(i, 2);
      i += 2;
    } else if (std::string("><!&|()%+-").find(ch) != std::string::npos) {
      t.kind = Token::Op;
      t.text = std::string(1, ch);
      ++i;
    } else {
      throw SchemaError("predicate: unexpected character '" + std::string(1, ch) +
                        "' at position " + std::to_string(i));
    }
    out.push_back(std::move(t));
  }
  out.push_back(Token{Token::End, "", src.size()});
  return out;
}

struct Lin {
  std::int64_t coef[2] = {0, 0};
  std::int64_t cst = 0;
};

class Parser {
 public:
  Parser(const std::string& src, const VarNames& vars)
      : src_(src), vars_(vars), toks_(tokenize(src)) {}

  Formula parse() {
    Formula f = parse_or();
    if (!at_end())
      throw SchemaError("predicate '" + src_ + "': trailing input at position " +
                        std::to_string(peek().pos));
    return f;
  }

 private:
  const Token& peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  bool at_end() const { return peek().kind == Token::End; }
  bool accept_op(const std::string& text) {
    if (peek().kind == Token::Op && peek().text == text) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect_op(const std::string& text) {
    if (!accept_op(text))
      throw SchemaError("predicate '" + src_ + "': expected '" + text + "' at position " +
                        std::to_string(peek().pos));
  }
  std::int64_t expect_num() {
    if (peek().kind != Token::Num)
      throw SchemaError("predicate '" + src_ + "': expected a number at position " +
                        std::to_string(peek().pos));
    std::int64_t v = std::stoll(toks_[pos_].text);
    ++pos_;
    return v;
  }
  int resolve_var(const Token& t) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == t.text) return static_cast<int>(i);
    throw SchemaError("predicate '" + src_ + "': unknown variable '" + t.text + "'");
  }

  Formula parse_or() {
    std::vector<Formula> kids{parse_and()};
    while (accept_op("|")) kids.push_back(parse_and());
    return Formula::disj(std::move(kids));
  }

  Formula parse_and() {
    std::vector<Formula> kids{parse_not()};
    while (accept_op("&")) kids.push_back(parse_not());
    return Formula::conj(std::move(kids));
  }

  Formula parse_not() {
    if (accept_op("!")) return Formula::neg(parse_not());
    return parse_primary();
  }

  Formula parse_primary() {
    if (accept_op("(")) {
      Formula f = parse_or();
      expect_op(")");
      return f;
    }
    if (peek().kind == Token::Ident) {
      if (peek().text == "true") {
        ++pos_;
        return Formula::truth(true);
      }
      if (peek().text == "false") {
        ++pos_;
        return Formula::truth(false);
      }
      if (peek(1).kind == Token::Op && peek(1).text == "%") {
        int v = resolve_var(peek());
        pos_ += 2;
        std::int64_t k = expect_num();
        if (k < 1) throw SchemaError("predicate '" + src_ + "': modulus must be positive");
        expect_op("==");
        std::int64_t r = expect_num();
        return Formula::mod_eq(v, static_cast<std::uint32_t>(k),
                               static_cast<std::uint32_t>(r % k));
      }
    }
    return parse_comparison();
  }

  Lin parse_lin() {
    Lin lin;
    std::int64_t sign = accept_op("-") ? -1 : 1;
    for (;;) {
      if (peek().kind == Token::Ident) {
        lin.coef[resolve_var(peek())] += sign;
        ++pos_;
      } else if (peek().kind == Token::Num) {
        lin.cst += sign * expect_num();
      } else {
        throw SchemaError("predicate '" + src_ + "': expected a variable or number at position " +
                          std::to_string(peek().pos));
      }
      if (accept_op("+"))
        sign = 1;
      else if (accept_op("-"))
        sign = -1;
      else
        break;
    }
    return lin;
  }

  // lhs - rhs >= t, classified by net coefficients.
  Formula build_ge(const Lin& d, std::int64_t t) const {
    std::int64_t c = t - d.cst;
    std::int64_t dm = d.coef[0], dn = d.coef[1];
    if (dm == 0 && dn == 0) return Formula::truth(0 >= c);
    if (dm == 1 && dn == 0) return Formula::ge(0, c);
    if (dm == 0 && dn == 1) return Formula::ge(1, c);
    if (dm == -1 && dn == 0) return Formula::le(0, -c);
    if (dm == 0 && dn == -1) return Formula::le(1, -c);
    if (dm == 1 && dn == -1) return Formula::diff_ge(0, 1, c);
    if (dm == -1 && dn == 1) return Formula::diff_ge(1, 0, c);
    throw SchemaError("predicate '" + src_ + "': net variable coefficients must be -1, 0 or 1");
  }

  Formula parse_comparison() {
    Lin lhs = parse_lin();
    std::string op;
    if (peek().kind == Token::Op) op = peek().text;
    if (op != ">=" && op != "<=" && op != ">" && op != "<" && op != "==" && op != "!=")
      throw SchemaError("predicate '" + src_ + "': expected a comparison at position " +
                        std::to_string(peek().pos));
    ++pos_;
    Lin rhs = parse_lin();
    Lin d;
    d.coef[0] = lhs.coef[0] - rhs.coef[0];
    d.coef[1] = lhs.coef[1] - rhs.coef[1];
    d.cst = lhs.cst - rhs.cst;
    Lin nd;
    nd.coef[0] = -d.coef[0];
    nd.coef[1] = -d.coef[1];
    nd.cst = -d.cst;
    if (op == ">=") return build_ge(d, 0);
    if (op == ">") return build_ge(d, 1);
    if (op == "<=") return build_ge(nd, 0);
    if (op == "<") return build_ge(nd, 1);
    if (op == "==") return Formula::conj({build_ge(d, 0), build_ge(nd, 0)});
    return Formula::disj({build_ge(d, 1), build_ge(nd, 1)});  // !=
  }

  std::string src_;
  const VarNames& vars_;
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

void append_formula(std::string& out, const Formula& f, const VarNames& vars, int parent_prec) {
  // precedence: or=0, and=1, not/atom=2
  auto var_name = [&](int slot) -> const std::string& {
    if (slot < 0 || slot >= static_cast<int>(vars.size()))
      throw PreconditionError("predicate printing: variable slot out of range");
    return vars[slot];
  };
  switch (f.kind) {
    case FKind::True:
      out += "true";
      return;
    case FKind::False:
      out += "false";
      return;
    case FKind::Or: {
      bool wrap = parent_prec > 0;
      if (wrap) out += "(";
      for (size_t i = 0; i < f.kids.size(); ++i) {
        if (i) out += "|";
        append_formula(out, f.kids[i], vars, 0);
      }
      if (wrap) out += ")";
      return;
    }
    case FKind::And: {
      bool wrap = parent_prec > 1;
      if (wrap) out += "(";
      for (size_t i = 0; i < f.kids.size(); ++i) {
        if (i) out += "&";
        append_formula(out, f.kids[i], vars, 1);
      }
      if (wrap) out += ")";
      return;
    }
    case FKind::Not:
      out += "!(";
      append_formula(out, f.kids[0], vars, 0);
      out += ")";
      return;
    case FKind::GeC:
      out += var_name(f.var) + ">=" + std::to_string(f.c);
      return;
    case FKind::LeC:
      out += var_name(f.var) + "<=" + std::to_string(f.c);
      return;
    case FKind::DiffGe:
      out += var_name(f.var) + "-" + var_name(f.var2) + ">=" + std::to_string(f.c);
      return;
    case FKind::ModEq:
      out += var_name(f.var) + "%" + std::to_string(f.k) + "==" + std::to_string(f.r);
      return;
  }
}

}  // namespace

Formula parse_formula(const std::string& src, const VarNames& vars) {
  return Parser(src, vars).parse();
}

std::string formula_to_string(const Formula& f, const VarNames& vars) {
  std::string out;
  append_formula(out, f, vars, 0);
  return out;
}

}  // namespace seqtop
