#include <string>
#include <vector>

#include "doctest.h"
#include "seqtop/chrono.hpp"
#include "seqtop/errors.hpp"

using namespace seqtop;

namespace {

const VarNames kMN{"m", "n"};

// Ascending chain c meeting descending chain d, everything in c before
// everything in d.
ChronoModel two_chains() {
  ChronoModel m;
  m.core = GroundSet(std::vector<std::string>{});
  m.families = {"c", "d"};
  m.core_core = {};
  m.core_fam = {};
  m.fam_core = {{}, {}};
  m.fam_fam = {{parse_formula("m<n", kMN), parse_formula("true", kMN)},
               {Formula::truth(false), parse_formula("m>n", kMN)}};
  return m;
}

ChronoModel with_core() {
  ChronoModel m;
  m.core = GroundSet({"p", "q"});
  m.families = {"c"};
  m.core_core = {{0, 1}, {0, 0}};
  m.core_fam = {{parse_formula("n>=2", kMN)}, {Formula::truth(false)}};
  m.fam_core = {{Formula::truth(false), parse_formula("true", kMN)}};
  m.fam_fam = {{parse_formula("m<n", kMN)}};
  return m;
}

}  // namespace

TEST_SUITE("chrono") {
  TEST_CASE("point_before follows the relation tables") {
    ChronoModel m = two_chains();
    CHECK(point_before(m, ModelPoint::fam_pt(0, 0), ModelPoint::fam_pt(0, 1)));
    CHECK_FALSE(point_before(m, ModelPoint::fam_pt(0, 1), ModelPoint::fam_pt(0, 0)));
    CHECK(point_before(m, ModelPoint::fam_pt(0, 5), ModelPoint::fam_pt(1, 0)));
    CHECK(point_before(m, ModelPoint::fam_pt(1, 3), ModelPoint::fam_pt(1, 1)));
    ChronoModel c = with_core();
    CHECK(point_before(c, ModelPoint::core_pt(0), ModelPoint::core_pt(1)));
    CHECK(point_before(c, ModelPoint::core_pt(0), ModelPoint::fam_pt(0, 2)));
    CHECK_FALSE(point_before(c, ModelPoint::core_pt(0), ModelPoint::fam_pt(0, 1)));
    CHECK(point_before(c, ModelPoint::fam_pt(0, 7), ModelPoint::core_pt(1)));
  }

  TEST_CASE("pasts of points and sets") {
    ChronoModel m = two_chains();
    SymbolicSet pd0 = past_of_fam(m, 1, 0);  // everything in c, d beyond 0
    CHECK(nat_all(pd0.fams[0]));
    CHECK(pd0.fams[1] == NatSet::from_threshold(1));
    SymbolicSet pc3 = past_of_fam(m, 0, 3);
    CHECK(pc3.fams[0] == NatSet::finite({0, 1, 2}));
    CHECK(nat_empty(pc3.fams[1]));

    SymbolicSet all_c = sym_make(2);
    all_c.fams[0] = NatSet::all();
    SymbolicSet u = past_of_set(m, all_c);
    CHECK(nat_all(u.fams[0]));
    CHECK(nat_empty(u.fams[1]));
  }

  TEST_CASE("points before all, common past") {
    ChronoModel m = two_chains();
    SymbolicSet all_d = sym_make(2);
    all_d.fams[1] = NatSet::all();
    SymbolicSet before = points_before_all(m, all_d);
    CHECK(nat_all(before.fams[0]));
    CHECK(nat_empty(before.fams[1]));
    SymbolicSet cp = common_past(m, all_d);
    CHECK(nat_all(cp.fams[0]));
    CHECK(nat_empty(cp.fams[1]));
  }

  TEST_CASE("family past comparisons are exact over all indices") {
    ChronoModel m = two_chains();
    SymbolicSet all_c = sym_make(2);
    all_c.fams[0] = NatSet::all();
    // every d instance has past containing all of c
    CHECK(nat_all(fam_past_contains(m, 1, all_c)));
    // no c instance's past contains all of c
    CHECK(nat_empty(fam_past_contains(m, 0, all_c)));
    // every c instance's past stays inside c
    CHECK(nat_all(fam_past_within(m, 0, all_c)));
    CHECK(nat_empty(fam_past_within(m, 1, all_c)));
    CHECK(nat_empty(fam_past_equals(m, 0, all_c)));
  }

  TEST_CASE("transpose swaps the chronology") {
    ChronoModel m = with_core();
    ChronoModel r = transpose(m);
    CHECK(r.core_core[1][0] == 1);
    CHECK(r.core_core[0][1] == 0);
    CHECK(point_before(r, ModelPoint::core_pt(1), ModelPoint::core_pt(0)));
    CHECK(point_before(r, ModelPoint::fam_pt(0, 2), ModelPoint::core_pt(0)));
    CHECK(point_before(r, ModelPoint::core_pt(1), ModelPoint::fam_pt(0, 7)));
    // double transpose is the identity semantically
    ChronoModel rr = transpose(r);
    for (std::uint64_t a = 0; a < 6; ++a)
      for (std::uint64_t b = 0; b < 6; ++b)
        CHECK(point_before(rr, ModelPoint::fam_pt(0, a), ModelPoint::fam_pt(0, b)) ==
              point_before(m, ModelPoint::fam_pt(0, a), ModelPoint::fam_pt(0, b)));
  }

  TEST_CASE("scale joins every relation predicate") {
    ChronoModel m = with_core();
    FormulaScale s = model_scale(m);
    CHECK(s.C >= 2);  // the n>=2 guard contributes
  }

  TEST_CASE("validation catches irreflexivity") {
    ChronoModel m = two_chains();
    m.fam_fam[0][0] = parse_formula("true", kMN);  // c(0) before c(0)
    ModelValidation v = validate_model(m);
    CHECK(!v.irreflexivity.empty());
  }

  TEST_CASE("validation catches intransitivity") {
    ChronoModel m;
    m.core = GroundSet(std::vector<std::string>{});
    m.families = {"a", "b", "c"};
    m.fam_core = {{}, {}, {}};
    auto F = [&](const char* s) { return parse_formula(s, kMN); };
    m.fam_fam = {{Formula::truth(false), F("true"), Formula::truth(false)},
                 {Formula::truth(false), Formula::truth(false), F("true")},
                 {Formula::truth(false), Formula::truth(false), Formula::truth(false)}};
    ModelValidation v = validate_model(m);
    CHECK(!v.transitivity.empty());
  }

  TEST_CASE("validation catches indistinguishable families") {
    ChronoModel m;
    m.core = GroundSet(std::vector<std::string>{});
    m.families = {"a", "u", "v"};
    m.fam_core = {{}, {}, {}};
    auto F = [&](const char* s) { return parse_formula(s, kMN); };
    // u and v receive identical relations and emit nothing
    m.fam_fam = {{F("m<n"), F("n>m"), F("n>m")},
                 {Formula::truth(false), Formula::truth(false), Formula::truth(false)},
                 {Formula::truth(false), Formula::truth(false), Formula::truth(false)}};
    ModelValidation v = validate_model(m);
    CHECK(!v.distinguishing.empty());
  }

  TEST_CASE("validation checks endpoint sets") {
    ChronoModel m = two_chains();
    ChronoModel::Endpoint tip;
    tip.name = "bad";
    tip.set = sym_make(2);
    tip.set.fams[0] = NatSet::all();
    tip.set.fams[1] = NatSet::all();  // not a past set and no chain generates it
    tip.gen_fam = 0;
    m.tips.push_back(tip);
    ModelValidation v = validate_model(m);
    CHECK(!v.endpoints.empty());

    ChronoModel good = two_chains();
    ChronoModel::Endpoint ok;
    ok.name = "P";
    ok.set = sym_make(2);
    ok.set.fams[0] = NatSet::all();
    ok.gen_fam = 0;
    good.tips.push_back(ok);
    CHECK(validate_model(good).ok());
  }

  TEST_CASE("validation checks sequences") {
    ChronoModel m = two_chains();
    ChronoModel::Sequence s;
    s.name = "finite";
    s.fam = 0;
    s.indices = NatSet::finite({1, 2});
    m.sequences.push_back(s);
    ModelValidation v = validate_model(m);
    CHECK(!v.sequences.empty());
    CHECK_THROWS_AS(require_valid_model(m), PreconditionError);
  }

  TEST_CASE("describe_point") {
    ChronoModel m = with_core();
    CHECK(describe_point(m, ModelPoint::core_pt(0)) == "p");
    CHECK(describe_point(m, ModelPoint::fam_pt(0, 3)) == "c(3)");
  }
}
