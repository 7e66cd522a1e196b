#include <random>
#include <vector>

#include "doctest.h"
#include "seqtop/enumeration.hpp"
#include "seqtop/errors.hpp"
#include "seqtop/limit_op.hpp"

using namespace seqtop;

namespace {

TailLimitOperator cascade() {
  GroundSet g({"a", "b", "c"});
  std::vector<Mask> t(8, 0);
  t[1] = 3;
  t[2] = 6;
  t[4] = 6;
  t[3] = 2;
  t[5] = 2;
  t[6] = 6;
  t[7] = 2;
  return make_operator(g, std::move(t));
}

// The same cascade with the third singleton made inert; the iterates then
// leave the derived-topology operator unreachable.
TailLimitOperator broken_cascade() {
  GroundSet g({"a", "b", "c"});
  std::vector<Mask> t(8, 0);
  t[1] = 3;   // {a} -> {a,b}
  t[2] = 6;   // {b} -> {b,c}
  t[4] = 4;   // {c} -> {c}
  t[3] = 2;
  t[5] = 0;
  t[6] = 4;
  t[7] = 0;
  return make_operator(g, std::move(t));
}

TailLimitOperator pruned() {
  GroundSet g({"a", "b"});
  std::vector<Mask> t(4, 0);
  t[1] = 3;
  t[2] = 3;
  t[3] = 0;
  return make_operator(g, std::move(t));
}

TailLimitOperator random_antitone(std::mt19937_64& rng, const GroundSet& g) {
  int n = g.size();
  Mask full = g.full();
  std::vector<Mask> t(size_t{1} << n, 0);
  std::uniform_int_distribution<Mask> dist(0, full);
  for (Mask b = 1; b <= full; ++b) {
    Mask cap = full;  // masks ascend, so every one-smaller row is already drawn
    for (int i = 0; i < n; ++i)
      if (has(b, i) && (b & ~bit(i))) cap &= t[b & ~bit(i)];
    t[b] = dist(rng) & cap;
    if ((b & (b - 1)) == 0) t[b] |= b;  // constant sequences keep their point
  }
  return make_operator(g, std::move(t));
}

}  // namespace

TEST_SUITE("limit_op") {
  TEST_CASE("make_operator rejects non-antitone tables") {
    GroundSet g({"a", "b"});
    std::vector<Mask> t(4, 0);
    t[1] = 1;
    t[2] = 2;
    t[3] = 3;  // strictly bigger than both singleton rows
    CHECK_THROWS_AS(make_operator(g, std::move(t)), PreconditionError);
  }

  TEST_CASE("derived topology of the cascade") {
    FinTopology t = derived_topology(cascade());
    REQUIRE(t.opens.size() == 3);
    CHECK(t.opens[0] == 0);
    CHECK(t.opens[1] == 1);
    CHECK(t.opens[2] == 7);
  }

  TEST_CASE("derived and associated operators are inverse on topologies") {
    GroundSet g({"a", "b", "c"});
    for (const auto& opens : all_topologies(3)) {
      FinTopology t = make_topology(g, opens);
      CHECK(derived_topology(associated_operator(t)) == t);
      CHECK(order_of(associated_operator(t)).kind == OperatorOrder::Kind::FirstOrder);
    }
  }

  TEST_CASE("order classification of the worked operators") {
    OperatorOrder o = order_of(cascade());
    CHECK(o.kind == OperatorOrder::Kind::KthOrder);
    CHECK(o.k == 2);
    CHECK(o.describe() == "order 2");
    CHECK(order_of(broken_cascade()).kind == OperatorOrder::Kind::NotAnyOrder);
    OperatorOrder p = order_of(pruned());
    CHECK(p.kind == OperatorOrder::Kind::NotAnyOrder);
    CHECK(p.describe() == "not of any order");
  }

  TEST_CASE("iteration stabilizes within the ground size") {
    IterationResult r = iterate_operator(cascade());
    CHECK(r.stable_at <= 3);
    CHECK(r.tables.back() == iterate_operator(cascade(), r.stable_at + 1).tables.back());
  }

  TEST_CASE("star operator matches the subprofile-window definition") {
    std::mt19937_64 rng(20260822);
    GroundSet g({"a", "b", "c", "d"});
    int tried = 0;
    for (int it = 0; it < 400; ++it) {
      TailLimitOperator op = random_antitone(rng, g);
      FinTopology t = derived_topology(op);
      for (Mask d = 0; d <= g.full(); ++d) {
        if (designation_problem(t, d).has_value()) continue;
        ++tried;
        TailLimitOperator star = star_operator(op, d);
        // independent recomputation: a profile sees the domain if some
        // nonempty subprofile has a limit in it
        for (Mask b = 1; b <= g.full(); ++b) {
          Mask seen = 0;
          for (Mask s = b;; s = (s - 1) & b) {
            if (s) seen |= op.table[s];
            if (!s) break;
          }
          Mask expect = (seen & d) ? (op.table[b] & d) : op.table[b];
          CHECK(star.table[b] == expect);
        }
      }
    }
    CHECK(tried > 100);
  }

  TEST_CASE("star requires a valid designation") {
    TailLimitOperator op = cascade();
    // {b} is not open in the derived topology {∅, {a}, X}
    CHECK_THROWS_AS(star_operator(op, Mask{2}), PreconditionError);
  }

  TEST_CASE("restriction to an open domain") {
    TailLimitOperator op = cascade();
    TailLimitOperator sub = restrict_operator(op, Mask{1});
    CHECK(sub.ground.labels() == std::vector<std::string>{"a"});
    CHECK(sub.table[1] == 1);
  }

  TEST_CASE("pointwise order") {
    TailLimitOperator op = cascade();
    TailLimitOperator star = star_operator(op, Mask{1});
    CHECK(pointwise_leq(star, op));
    CHECK_FALSE(pointwise_leq(op, star));
  }
}
