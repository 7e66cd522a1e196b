#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "seqtop/natset.hpp"

namespace seqtop {

// Index predicates over one or two natural-valued variables (slots 0 and 1).
// Atoms are threshold comparisons, difference thresholds and congruences,
// closed under and/or/not.  Everything downstream (quantifier elimination,
// tail analysis) relies on the decidability of this fragment.
enum class FKind { True, False, And, Or, Not, GeC, LeC, DiffGe, ModEq };

struct Formula {
  FKind kind = FKind::True;
  int var = 0;       // slot for GeC/LeC/ModEq, minuend slot for DiffGe
  int var2 = 1;      // subtrahend slot for DiffGe
  std::int64_t c = 0;
  std::uint32_t k = 1;  // modulus
  std::uint32_t r = 0;  // residue
  std::vector<Formula> kids;

  bool operator==(const Formula&) const = default;

  static Formula truth(bool b);
  static Formula ge(int v, std::int64_t c);              // value(v) >= c
  static Formula le(int v, std::int64_t c);              // value(v) <= c
  static Formula diff_ge(int a, int b, std::int64_t c);  // value(a) - value(b) >= c
  static Formula mod_eq(int v, std::uint32_t k, std::uint32_t r);
  static Formula conj(std::vector<Formula> kids);
  static Formula disj(std::vector<Formula> kids);
  static Formula neg(Formula f);
};

using VarNames = std::vector<std::string>;

// Grammar: or-of-and-of-(possibly negated) atoms with parentheses; atoms are
// linear comparisons "lhs op rhs" (op in >=, <=, >, <, ==, !=) over sums of
// variables and integer constants with net coefficients in {-1,0,1}, or
// congruences "v % k == r".  "true" and "false" are atoms too.
Formula parse_formula(const std::string& src, const VarNames& vars);
std::string formula_to_string(const Formula& f, const VarNames& vars);

bool eval_formula(const Formula& f, std::uint64_t v0, std::uint64_t v1 = 0);
bool uses_var(const Formula& f, int slot);

struct FormulaScale {
  std::int64_t C = 1;   // one plus the largest constant magnitude
  std::uint32_t K = 1;  // least common multiple of the moduli
};
FormulaScale formula_scale(const Formula& f);
FormulaScale join_scale(FormulaScale a, FormulaScale b);
// Threshold past which one-variable eliminations are periodic in the free
// variable: 2C + 3K + 2.
std::uint64_t tail_threshold(const FormulaScale& s);
// Small-model bounds: two formulas (or implication chains) over the same
// variables agree everywhere iff they agree on the grid/cube below the bound.
std::uint64_t pair_bound(const FormulaScale& s);
std::uint64_t cube_bound(const FormulaScale& s);

Formula substitute(const Formula& f, int slot, std::uint64_t value);
// Renames slot `from` to slot `to`; difference atoms over a collapsed pair
// fold to constants.
Formula rename_var(const Formula& f, int from, int to);
// Exchanges slots 0 and 1.
Formula swap_vars(const Formula& f);

// Truth set of a one-variable formula (must not mention the other slot).
NatSet compile_unary(const Formula& f, int slot);

// Quantifier eliminations over `quantified`; the result is the truth set over
// the remaining slot (constant-all or constant-empty if it is unused).
NatSet elim_exists(const Formula& f, int quantified);
NatSet elim_forall(const Formula& f, int quantified);
NatSet elim_eventually_all(const Formula& f, int quantified);    // all but finitely many
NatSet elim_infinitely_often(const Formula& f, int quantified);  // infinitely many

// Exact one-variable formula with the given truth set, in canonical shape.
Formula formula_from_natset(const NatSet& s, int slot);

// Semantic equality over both slots (grid check up to the small-model bound).
bool formulas_equal(const Formula& a, const Formula& b);

}  // namespace seqtop
