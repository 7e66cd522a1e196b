#include <string>
#include <vector>

#include "doctest.h"
#include "seqtop/errors.hpp"
#include "seqtop/fixtures.hpp"
#include "seqtop/report.hpp"

using namespace seqtop;

namespace {

Completion completion_of(const std::string& fixture_id) {
  Fixture f = make_fixture(fixture_id);
  REQUIRE(f.model.has_value());
  return build_completion(*f.model);
}

std::vector<NamedSequence> model_catalog(const Completion& c) {
  std::vector<NamedSequence> out;
  for (const auto& s : c.model.sequences)
    out.push_back({s.name, resolve_sequence(c, s)});
  return out;
}

const std::vector<std::string> kClaimNames = {
    "chronology-sets-open",
    "empty-component-compatibility",
    "cross-separation-base",
    "cross-separation-starred",
    "terminal-chain-endpoint",
    "boundary-closed",
    "manifold-dense",
    "manifold-subspace-base",
    "manifold-subspace-starred",
    "manifold-subspace-double-starred",
    "t1-points",
    "report-minimality",
};

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("arena of the opposed chains") {
    Completion c = completion_of("removed-point");
    Arena a = build_arena(c);
    REQUIRE(a.points.size() == 5);
    std::vector<std::string> names;
    for (const auto& p : a.points) names.push_back(p.name);
    CHECK(names == std::vector<std::string>{"c(0)", "c(1)", "d(0)", "d(1)", "P|F"});
    CHECK(a.rank == 1);
    CHECK(a.manifold == Mask{0b01111});
    CHECK(a.points[4].bd == 0);
    // the profile-limit table is a valid antitone operator
    CHECK_NOTHROW(make_operator(a.ground, a.op.table));
    // constant profiles at manifold points recover the point
    for (int i = 0; i < 4; ++i) CHECK(a.op.at(Mask{1} << i) == (Mask{1} << i));
  }

  TEST_CASE("arena size policy") {
    Completion c = completion_of("removed-point");
    Arena small = build_arena(c, 4);  // no room for two reps per family
    CHECK(small.rank == 0);
    CHECK(small.points.size() == 3);
    CHECK_THROWS_AS(build_arena(c, 2), CapacityError);

    Arena wide = build_arena(completion_of("example-A1"));
    CHECK(wide.points.size() == 19);
    CHECK(wide.rank == 1);
    Arena tower = build_arena(completion_of("example-A3"));
    CHECK(tower.points.size() == 14);
    CHECK(tower.rank == 0);
  }

  TEST_CASE("isolated points are rejected") {
    ChronoModel m;
    m.core = GroundSet(std::vector<std::string>{});
    m.families = {"z"};
    m.fam_core = {{}};
    m.fam_fam = {{Formula::truth(false)}};
    Completion c = build_completion(m);
    CHECK_THROWS_AS(build_arena(c), PreconditionError);
  }

  TEST_CASE("opposed chains report passes every claim") {
    Completion c = completion_of("removed-point");
    AdmissibilityReport r = admissibility_report(c, model_catalog(c));
    REQUIRE(r.claims.size() == kClaimNames.size());
    for (size_t i = 0; i < kClaimNames.size(); ++i) CHECK(r.claims[i].name == kClaimNames[i]);
    for (const auto& cl : r.claims) CHECK(cl.verdict == Verdict::Yes);
    CHECK(r.all_passed());
    CHECK(r.fully_decided());
    CHECK(!r.notes.empty());
    CHECK(r.find("manifold-dense") != nullptr);
    CHECK(r.find("no-such-claim") == nullptr);
  }

  TEST_CASE("near-corner report flags the diagnostics only") {
    Completion c = completion_of("example-A1");
    AdmissibilityReport r = admissibility_report(c, model_catalog(c));
    const ClaimResult* base = r.find("cross-separation-base");
    REQUIRE(base != nullptr);
    CHECK(base->verdict == Verdict::No);
    CHECK_FALSE(base->gating);
    CHECK(r.verdict_of("cross-separation-starred") == Verdict::Yes);
    const ClaimResult* dbl = r.find("manifold-subspace-double-starred");
    REQUIRE(dbl != nullptr);
    CHECK_FALSE(dbl->gating);
    CHECK(r.all_passed());
    std::string text = format_report(r);
    CHECK(text.find("(diagnostic)") != std::string::npos);
  }

  TEST_CASE("the manifold-first modification never mixes") {
    for (const char* id : {"example-A1", "example-A2", "example-A4", "example-A3"}) {
      Completion c = completion_of(id);
      for (const auto& s : c.model.sequences) {
        StarResult st = chron_star(c, resolve_sequence(c, s));
        bool mixed = st.starred.any_manifold() && st.starred.any_boundary();
        CHECK_FALSE(mixed);
        if (st.manifold_branch) CHECK_FALSE(st.starred.any_boundary());
      }
    }
  }
}
