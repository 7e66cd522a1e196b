#include "doctest.h"
#include "seqtop/laws.hpp"

using namespace seqtop;

namespace {

FinTopology sierpinski() { return generate_topology(GroundSet({"p", "q"}), {Mask{1}}); }

}  // namespace

TEST_SUITE("laws") {
  TEST_CASE("operator laws hold for associated operators") {
    for (const auto& opens : all_topologies(3)) {
      FinTopology t = make_topology(GroundSet({"a", "b", "c"}), opens);
      for (Mask d = 0; d <= t.ground.full(); ++d) {
        if (designation_problem(t, d).has_value()) continue;
        LawReport r = check_operator_laws(associated_operator(t), d);
        CHECK(r.ok());
      }
    }
  }

  TEST_CASE("law report carries named checks") {
    LawReport r = check_operator_laws(associated_operator(sierpinski()), Mask{1});
    CHECK(!r.checks.empty());
    for (const auto& c : r.checks) CHECK(!c.name.empty());
  }

  TEST_CASE("density law on the two-point example") {
    DensityCheck d = check_density_law(sierpinski(), Mask{1});
    CHECK(d.covered);
    CHECK(d.dense_base);
    CHECK(d.pass);
  }

  TEST_CASE("density law is vacuous when the domain reaches nothing") {
    // Discrete two points, domain {p}: q is no limit of domain profiles.
    FinTopology disc = generate_topology(GroundSet({"p", "q"}), {Mask{1}, Mask{2}});
    DensityCheck d = check_density_law(disc, Mask{1});
    CHECK_FALSE(d.covered);
    CHECK(d.pass);
  }

  TEST_CASE("exhaustive sweeps find no counterexample on small grounds") {
    for (int n = 1; n <= 3; ++n) {
      SweepStats st = sweep_separation(n);
      CHECK(st.counterexamples == 0);
      CHECK(st.designations > 0);
      CHECK(st.topologies == count_topologies(n));
    }
  }
}
