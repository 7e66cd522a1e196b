#include <algorithm>
#include <vector>

#include "doctest.h"
#include "seqtop/errors.hpp"
#include "seqtop/topology.hpp"

using namespace seqtop;

namespace {

FinTopology sierpinski() { return generate_topology(GroundSet({"p", "q"}), {Mask{1}}); }

FinTopology crust() { return generate_topology(GroundSet({"p", "q", "r"}), {Mask{1}, Mask{3}}); }

std::string opens_str(const FinTopology& t) {
  std::string out;
  for (Mask o : t.opens) {
    if (!out.empty()) out += ' ';
    out += t.ground.format(o);
  }
  return out;
}

}  // namespace

TEST_SUITE("topology") {
  TEST_CASE("make_topology validates the axioms") {
    GroundSet g({"a", "b"});
    CHECK_THROWS_AS(make_topology(g, {0b00, 0b01, 0b10}), PreconditionError);  // no full set
    GroundSet g3({"a", "b", "c"});
    // missing union {a,b}
    CHECK_THROWS_AS(make_topology(g3, {0b000, 0b001, 0b010, 0b111}), PreconditionError);
    // missing intersection {b}
    CHECK_THROWS_AS(make_topology(g3, {0b000, 0b011, 0b110, 0b111}), PreconditionError);
    CHECK_NOTHROW(make_topology(g, {0b00, 0b01, 0b10, 0b11}));
  }

  TEST_CASE("generation from a subbasis") {
    FinTopology s = sierpinski();
    CHECK(opens_str(s) == "{} {p} {p,q}");
    FinTopology c = crust();
    CHECK(opens_str(c) == "{} {p} {p,q} {p,q,r}");
    CHECK(c.min_nbhd[0] == 1);
    CHECK(c.min_nbhd[1] == 3);
    CHECK(c.min_nbhd[2] == 7);
  }

  TEST_CASE("closure, density, T1") {
    FinTopology s = sierpinski();
    CHECK(closure(s, Mask{1}) == 3);  // q specializes to p
    CHECK(closure(s, Mask{2}) == 2);
    CHECK(is_dense(s, Mask{1}));
    CHECK_FALSE(is_dense(s, Mask{2}));
    CHECK_FALSE(is_T1(s));
    auto fails = t1_failures(s);
    REQUIRE(fails.size() == 1);
    CHECK(fails[0] == std::pair<int, int>{1, 0});  // every open around q contains p
    FinTopology disc = generate_topology(GroundSet({"p", "q"}), {Mask{1}, Mask{2}});
    CHECK(is_T1(disc));
  }

  TEST_CASE("subspace keeps label order") {
    FinTopology c = crust();
    FinTopology sub = subspace(c, 0b101);  // p and r
    CHECK(sub.ground.labels() == std::vector<std::string>{"p", "r"});
    CHECK(opens_str(sub) == "{} {p} {p,r}");
  }

  TEST_CASE("designation validity") {
    FinTopology c = crust();
    CHECK_FALSE(designation_problem(c, Mask{1}).has_value());
    CHECK(designation_problem(c, Mask{2}).has_value());  // {q} is not open
    // {p,q} is open but indiscrete as a subspace, hence not a designation
    CHECK(designation_problem(c, Mask{3}).has_value());
    CHECK_THROWS_AS(require_designation(c, Mask{3}), PreconditionError);
  }

  TEST_CASE("separating refinement on the worked two-point example") {
    FinTopology s = sierpinski();
    FinTopology r = separating_refinement(s, Mask{1});
    CHECK(opens_str(r) == "{} {p} {q} {p,q}");
    SeparationReport rep = verify_minimality(s, r, Mask{1}, 5);
    CHECK(rep.a_fin);
    CHECK(rep.a_sep);
    CHECK(rep.a_min);
    CHECK(rep.unique_minimum);
    CHECK(rep.minimality_checked);
  }

  TEST_CASE("separating refinement on the three-point example") {
    FinTopology c = crust();
    FinTopology r = separating_refinement(c, Mask{1});
    CHECK(opens_str(r) == "{} {p} {q} {p,q} {q,r} {p,q,r}");
    // The outer two points stay glued: the refinement separates only
    // domain-vs-outside, and q r were never separated from each other.
    CHECK_FALSE(is_T1(r));
    SeparationReport rep = verify_minimality(c, r, Mask{1}, 5);
    CHECK(rep.a_fin);
    CHECK(rep.a_sep);
    CHECK(rep.a_min);
    CHECK(rep.unique_minimum);
  }

  TEST_CASE("refinement restricts to the same domain subspace") {
    FinTopology c = crust();
    FinTopology r = separating_refinement(c, Mask{1});
    CHECK(subspace(r, Mask{1}) == subspace(c, Mask{1}));
  }

  TEST_CASE("cross separation") {
    FinTopology s = sierpinski();
    CHECK_FALSE(cross_separated(s, s, Mask{1}));
    FinTopology r = separating_refinement(s, Mask{1});
    CHECK(cross_separated(s, r, Mask{1}));
  }

  TEST_CASE("min-neighbourhood reconstruction") {
    FinTopology c = crust();
    FinTopology back = topology_from_min_nbhd(c.ground, c.min_nbhd);
    CHECK(back == c);
  }

  TEST_CASE("finer_or_equal is the open-set containment order") {
    FinTopology s = sierpinski();
    FinTopology r = separating_refinement(s, Mask{1});
    CHECK(finer_or_equal(s, r));
    CHECK_FALSE(finer_or_equal(r, s));
    CHECK(finer_or_equal(s, s));
  }
}
