#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "seqtop/completion.hpp"
#include "seqtop/fixtures.hpp"

using namespace seqtop;

namespace {

int boundary_id(const Completion& c, const std::string& name) {
  for (size_t i = 0; i < c.boundary.size(); ++i)
    if (c.boundary[i].name == name) return static_cast<int>(i);
  return -1;
}

PairSequence fam_sequence(const Completion& c, const std::string& fam) {
  ChronoModel::Sequence s;
  s.fam = c.model.fam_require(fam);
  return resolve_sequence(c, s);
}

PairSequence named_sequence(const Completion& c, const std::string& name) {
  for (const auto& s : c.model.sequences)
    if (s.name == name) return resolve_sequence(c, s);
  REQUIRE(false);
  return {};
}

Completion completion_of(const std::string& fixture_id) {
  Fixture f = make_fixture(fixture_id);
  REQUIRE(f.model.has_value());
  return build_completion(*f.model);
}

}  // namespace

TEST_SUITE("completion") {
  TEST_CASE("two opposed chains pair into one boundary point") {
    Completion c = completion_of("removed-point");
    REQUIRE(c.problems.empty());
    REQUIRE(c.boundary.size() == 1);
    const auto& b = c.boundary[0];
    CHECK(b.name == "P|F");
    CHECK(b.tip >= 0);
    CHECK(b.tif >= 0);
    int cf = c.model.fam_require("c");
    int df = c.model.fam_require("d");
    CHECK(nat_all(b.past.fams[cf]));
    CHECK(nat_empty(b.past.fams[df]));
    CHECK(nat_all(b.future.fams[df]));
    CHECK(s_related(c, b.past, b.future));

    LimitSet l = chron_limit(c, fam_sequence(c, "c"));
    CHECK_FALSE(l.any_manifold());
    CHECK(l.boundary == std::vector<int>{0});
    CHECK(describe_limit_set(c, l) == "{bd:P|F}");
    // the descending chain converges to the same point
    CHECK(chron_limit(c, fam_sequence(c, "d")) == l);
  }

  TEST_CASE("one-sided endpoint yields a future-less pair") {
    Completion c = completion_of("minkowski-ray");
    REQUIRE(c.boundary.size() == 1);
    CHECK(c.boundary[0].name == "P|-");
    CHECK(c.boundary[0].tif == -1);
    CHECK(sym_is_empty(c.boundary[0].future));
    LimitSet l = chron_limit(c, fam_sequence(c, "r"));
    CHECK(describe_limit_set(c, l) == "{bd:P|-}");
  }

  TEST_CASE("maximality and partners on the opposed chains") {
    Completion c = completion_of("removed-point");
    const auto& b = c.boundary[0];
    CHECK(maximal_past_within(c, b.past, b.past));
    int cf = c.model.fam_require("c");
    SymbolicSet stub = sym_make(c.model.n_fams());
    stub.fams[cf] = NatSet::finite({0, 1, 2});
    // a truncated past is dominated by the full chain past
    CHECK_FALSE(maximal_past_within(c, stub, b.past));
    CHECK(has_partner_future(c, b.past));
    CHECK(has_partner_past(c, b.future));
  }

  TEST_CASE("ideal-set classification") {
    Completion c = completion_of("removed-point");
    const auto& b = c.boundary[0];
    CHECK(classify_ip(c, b.past).verdict == Verdict::Yes);
    CHECK(classify_if(c, b.future).verdict == Verdict::Yes);
    // the future set read as a past set is obstructed
    CHECK(classify_ip(c, b.future).verdict != Verdict::Yes);
  }

  TEST_CASE("cycle sequences resolve to pair profiles") {
    Completion c = completion_of("removed-point");
    ChronoModel::Sequence s;
    s.cycle = {ModelPoint::fam_pt(0, 0), ModelPoint::fam_pt(1, 0)};
    PairSequence p = resolve_sequence(c, s);
    CHECK(p.fam == -1);
    CHECK(p.cycle.size() == 2);
    CHECK(p.cycle[0].past == past_of_fam(c.model, 0, 0));
  }

  TEST_CASE("limits agree with the stats route") {
    Completion c = completion_of("removed-point");
    PairSequence s = fam_sequence(c, "c");
    CHECK(limits_from_stats(c, sequence_stats(c, s)) == chron_limit(c, s));
  }

  TEST_CASE("near-corner model drops the shielded endpoint") {
    Completion c = completion_of("example-A2");
    REQUIRE(c.problems.empty());
    REQUIRE(c.boundary.size() == 2);
    int pf = boundary_id(c, "P|F");
    int pp = boundary_id(c, "P'|-");
    REQUIRE(pf >= 0);
    REQUIRE(pp >= 0);

    PairSequence s = named_sequence(c, "sigma");
    LimitStats st = sequence_stats(c, s);
    int hf = c.model.fam_require("h");
    // the crux: no tail of the sequence sees any h instance in its past
    CHECK(nat_empty(st.li_past.fams[hf]));
    CHECK_FALSE(sym_subset(c.boundary[pf].past, st.li_past));
    CHECK(sym_subset(c.boundary[pp].past, st.li_past));

    LimitSet l = chron_limit(c, s);
    CHECK((l.cores & Mask{1}) != 0);  // the meeting core is a limit
    CHECK(l.boundary == std::vector<int>{pp});
    CHECK(describe_limit_set(c, l) == "{pt:p, bd:P'|-}");

    StarResult star = chron_star(c, s);
    CHECK(star.manifold_branch);
    CHECK_FALSE(star.starred.any_boundary());
    CHECK(describe_limit_set(c, star.starred) == "{pt:p}");

    // chains generating each endpoint land exactly on their own pair
    int hfam = c.model.fam_require("h");
    ChronoModel::Sequence hs;
    hs.fam = hfam;
    LimitSet lh = chron_limit(c, resolve_sequence(c, hs));
    CHECK(lh.boundary == std::vector<int>{pf});
    CHECK_FALSE(lh.any_manifold());
  }

  TEST_CASE("tower model iterates to a two-stage closure") {
    Completion c = completion_of("example-A3");
    REQUIRE(c.problems.empty());
    int pf = boundary_id(c, "Pinf|F");
    int pp = boundary_id(c, "P'inf|-");
    REQUIRE(pf >= 0);
    REQUIRE(pp >= 0);

    PairSequence sx = named_sequence(c, "sigma_x");
    LimitSet lx = chron_limit(c, sx);
    int yf = c.model.fam_require("y");
    CHECK(nat_all(lx.fams[yf]));
    CHECK(lx.boundary == std::vector<int>{pf});

    StarResult star = chron_star(c, sx);
    CHECK(star.manifold_branch);
    CHECK_FALSE(star.starred.any_boundary());

    PairSequence sy = named_sequence(c, "sigma_y");
    LimitSet ly = chron_limit(c, sy);
    CHECK_FALSE(ly.any_manifold());
    CHECK(ly.boundary == std::vector<int>{pp});
    CHECK_FALSE(chron_star(c, sy).manifold_branch);

    IterateResult it = chron_iterate(c, sx);
    REQUIRE(!it.stages.empty());
    CHECK(it.stages[0] == lx);
    CHECK(it.stable_at == 2);
    CHECK(it.stages.back().boundary.size() == 2);
  }

  TEST_CASE("limit set union merges componentwise") {
    Completion c = completion_of("removed-point");
    LimitSet a, b;
    a.fams.resize(2);
    b.fams.resize(2);
    a.cores = 0;
    a.fams[0] = NatSet::finite({1});
    a.boundary = {0};
    b.fams[1] = NatSet::from_threshold(2);
    LimitSet u = limit_set_union(a, b);
    CHECK(u.fams[0] == NatSet::finite({1}));
    CHECK(u.fams[1] == NatSet::from_threshold(2));
    CHECK(u.boundary == std::vector<int>{0});
  }
}
