#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "seqtop/errors.hpp"
#include "seqtop/formula.hpp"

using namespace seqtop;

namespace {

const VarNames kMN{"m", "n"};

Formula P(const std::string& s) { return parse_formula(s, kMN); }

// Independent evaluation bound:  beyond max(C, K) offsets everything in this
// fragment is periodic, so agreement on [0, 3*(1+C)*K) in each variable pins
// the formula.
std::uint64_t oracle_bound(const Formula& f) {
  FormulaScale s = formula_scale(f);
  return 3 * (1 + static_cast<std::uint64_t>(s.C)) * s.K;
}

}  // namespace

TEST_SUITE("formula") {
  TEST_CASE("parser handles each atom form") {
    CHECK(eval_formula(P("true"), 0, 0));
    CHECK_FALSE(eval_formula(P("false"), 0, 0));
    CHECK(eval_formula(P("m>=2"), 2, 0));
    CHECK_FALSE(eval_formula(P("m>=2"), 1, 0));
    CHECK(eval_formula(P("n<=3"), 0, 3));
    CHECK(eval_formula(P("m>n"), 4, 3));
    CHECK_FALSE(eval_formula(P("m>n"), 3, 3));
    CHECK(eval_formula(P("m==n"), 5, 5));
    CHECK_FALSE(eval_formula(P("m==n"), 5, 6));
    CHECK(eval_formula(P("m!=n"), 5, 6));
    CHECK(eval_formula(P("m%3==1"), 7, 0));
    CHECK_FALSE(eval_formula(P("m%3==1"), 6, 0));
    CHECK(eval_formula(P("m-n>=2"), 5, 3));
    CHECK_FALSE(eval_formula(P("m-n>=2"), 4, 3));
  }

  TEST_CASE("connectives and parentheses") {
    Formula f = P("n>=2|(n>=1&m>=1)");
    CHECK(eval_formula(f, 0, 2));
    CHECK(eval_formula(f, 1, 1));
    CHECK_FALSE(eval_formula(f, 0, 1));
    CHECK_FALSE(eval_formula(f, 5, 0));
    Formula g = P("!(m>n)&!(n>m)");
    for (std::uint64_t a = 0; a < 6; ++a)
      for (std::uint64_t b = 0; b < 6; ++b) CHECK(eval_formula(g, a, b) == (a == b));
  }

  TEST_CASE("parse failures are schema errors") {
    CHECK_THROWS_AS(P("m >>= 2"), SchemaError);
    CHECK_THROWS_AS(P("q>=1"), SchemaError);
    CHECK_THROWS_AS(P("m+n>=2"), SchemaError);  // net coefficient 2 on no variable? malformed
    CHECK_THROWS_AS(P("(m>=1"), SchemaError);
    CHECK_THROWS_AS(P(""), SchemaError);
  }

  TEST_CASE("print-parse round trip is semantics preserving") {
    for (const char* src : {"true", "false", "m>n", "n>=1|m>=2", "m==n", "m!=n",
                            "m%3==1&n>=2", "n>=2|(n>=1&m>=1)", "!(m-n>=3)"}) {
      Formula f = P(src);
      Formula g = P(formula_to_string(f, kMN));
      CHECK(formulas_equal(f, g));
    }
  }

  TEST_CASE("compile_unary equals brute membership") {
    for (const char* src : {"m>=4", "m<=2", "m%3==1", "m>=1&m<=7", "m%2==0|m<=1", "false", "true"}) {
      Formula f = parse_formula(src, {"m"});
      NatSet s = compile_unary(f, 0);
      for (std::uint64_t v = 0; v < 64; ++v) CHECK(s.member(v) == eval_formula(f, v, 0));
    }
  }

  TEST_CASE("quantifier eliminations against brute force") {
    for (const char* src :
         {"m>n", "m<n", "m==n", "m!=n", "n>=1|m>=2", "m-n>=2&n%2==0", "m%3==1&n>m",
          "n<=3", "m>=2", "true", "false", "(m>n&n>=2)|m%2==0"}) {
      Formula f = P(src);
      std::uint64_t bound = oracle_bound(f);
      NatSet ex = elim_exists(f, 1), fa = elim_forall(f, 1);
      NatSet ev = elim_eventually_all(f, 1), io = elim_infinitely_often(f, 1);
      FormulaScale sc = formula_scale(f);
      for (std::uint64_t m = 0; m < bound; ++m) {
        // For fixed m the formula is periodic in n beyond m + C, so one full
        // period past that point decides every quantifier.
        std::uint64_t settle = m + static_cast<std::uint64_t>(sc.C) + sc.K;
        bool bex = false, bfa = true;
        for (std::uint64_t n = 0; n <= settle + sc.K; ++n) {
          bex = bex || eval_formula(f, m, n);
          bfa = bfa && eval_formula(f, m, n);
        }
        bool bev = true, bio = false;
        for (std::uint64_t n = settle + 1; n <= settle + sc.K; ++n) {
          bev = bev && eval_formula(f, m, n);
          bio = bio || eval_formula(f, m, n);
        }
        CHECK(ex.member(m) == bex);
        CHECK(fa.member(m) == bfa);
        CHECK(ev.member(m) == bev);
        CHECK(io.member(m) == bio);
      }
    }
  }

  TEST_CASE("eliminations also work over the first slot") {
    Formula f = P("m>n");
    NatSet ev = elim_eventually_all(f, 0);  // for which n does m>n hold eventually in m
    CHECK(nat_all(ev));
    NatSet fa = elim_forall(f, 0);
    CHECK(nat_empty(fa));
  }

  TEST_CASE("formula_from_natset inverts compile_unary") {
    std::vector<NatSet> sets = {NatSet::empty_set(), NatSet::all(), NatSet::singleton(4),
                                NatSet::from_threshold(3), NatSet::finite({1, 5}),
                                NatSet::from_samples(2, 3, {1, 0, 0, 1, 0})};
    for (const auto& s : sets) {
      Formula f = formula_from_natset(s, 0);
      CHECK(compile_unary(f, 0) == s);
    }
  }

  TEST_CASE("substitute and swap") {
    Formula f = P("m>n");
    Formula at3 = substitute(f, 0, 3);  // 3 > n
    for (std::uint64_t n = 0; n < 8; ++n) CHECK(eval_formula(at3, 0, n) == (3 > n));
    Formula sw = swap_vars(f);
    for (std::uint64_t a = 0; a < 6; ++a)
      for (std::uint64_t b = 0; b < 6; ++b) CHECK(eval_formula(sw, a, b) == (b > a));
  }

  TEST_CASE("semantic equality ignores syntax") {
    CHECK(formulas_equal(P("m>n"), P("m-n>=1")));
    CHECK(formulas_equal(P("m==n"), P("!(m>n)&!(n>m)")));
    CHECK_FALSE(formulas_equal(P("m>n"), P("m>=n")));
  }

  TEST_CASE("scale and thresholds") {
    FormulaScale s = formula_scale(P("m-n>=4&n%6==1"));
    CHECK(s.C >= 5);
    CHECK(s.K == 6);
    CHECK(tail_threshold(s) == 2 * static_cast<std::uint64_t>(s.C) + 3 * s.K + 2);
  }
}
