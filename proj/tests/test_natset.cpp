#include <cstdint>
#include <vector>

#include "doctest.h"
#include "seqtop/natset.hpp"

using namespace seqtop;

namespace {

// Brute-force mirror of a set as a membership vector on [0, bound).
std::vector<char> dump(const NatSet& s, std::uint64_t bound) {
  std::vector<char> out(bound);
  for (std::uint64_t v = 0; v < bound; ++v) out[v] = s.member(v);
  return out;
}

std::vector<NatSet> catalog() {
  return {
      NatSet::empty_set(),
      NatSet::all(),
      NatSet::singleton(0),
      NatSet::singleton(7),
      NatSet::from_threshold(3),
      NatSet::finite({1, 3, 8}),
      NatSet::from_samples(0, 2, {1, 0}),           // evens
      NatSet::from_samples(0, 3, {0, 1, 0}),        // 1 mod 3
      NatSet::from_samples(4, 2, {1, 1, 0, 0, 1, 0}),  // {0,1} then evens
      NatSet::from_samples(2, 6, {0, 1, 1, 0, 1, 0, 1, 0}),
      NatSet::from_samples(5, 4, {1, 0, 0, 1, 1, 0, 1, 1, 0}),
  };
}

}  // namespace

TEST_SUITE("natset") {
  TEST_CASE("membership matches the builders") {
    CHECK(NatSet::from_threshold(3).member(3));
    CHECK_FALSE(NatSet::from_threshold(3).member(2));
    CHECK(NatSet::singleton(7).member(7));
    CHECK_FALSE(NatSet::singleton(7).member(8));
    NatSet evens = NatSet::from_samples(0, 2, {1, 0});
    CHECK(evens.member(0));
    CHECK(evens.member(1000));
    CHECK_FALSE(evens.member(999));
  }

  TEST_CASE("canonical forms are equal whenever membership agrees") {
    // Same set presented with a redundant threshold and doubled period.
    NatSet a = NatSet::from_samples(0, 2, {1, 0});
    NatSet b = NatSet::from_samples(6, 4, {1, 0, 1, 0, 1, 0, 1, 0, 1, 0});
    CHECK(a == b);
    CHECK(a.K == 2);
    CHECK(a.T == 0);
    CHECK(NatSet::from_samples(3, 1, {1, 1, 1, 1}) == NatSet::all());
  }

  TEST_CASE("boolean operations against brute force") {
    const std::uint64_t bound = 256;
    auto sets = catalog();
    for (const auto& a : sets)
      for (const auto& b : sets) {
        auto da = dump(a, bound), db = dump(b, bound);
        auto du = dump(nat_union(a, b), bound);
        auto di = dump(nat_intersect(a, b), bound);
        auto dd = dump(nat_diff(a, b), bound);
        for (std::uint64_t v = 0; v < bound; ++v) {
          CHECK(du[v] == (da[v] || db[v]));
          CHECK(di[v] == (da[v] && db[v]));
          CHECK(dd[v] == (da[v] && !db[v]));
        }
        bool sub = true;
        for (std::uint64_t v = 0; v < bound; ++v) sub = sub && (!da[v] || db[v]);
        CHECK(nat_subset(a, b) == sub);
      }
    for (const auto& a : sets) {
      auto dc = dump(nat_complement(a), bound);
      auto da = dump(a, bound);
      for (std::uint64_t v = 0; v < bound; ++v) CHECK(dc[v] == !da[v]);
    }
  }

  TEST_CASE("absolute phase: residues do not shift under intersection") {
    NatSet evens = NatSet::from_samples(0, 2, {1, 0});
    NatSet tail = NatSet::from_threshold(5);
    NatSet both = nat_intersect(evens, tail);
    CHECK(both.member(6));
    CHECK_FALSE(both.member(7));
    CHECK_FALSE(both.member(4));
  }

  TEST_CASE("classification predicates") {
    CHECK(nat_empty(NatSet::empty_set()));
    CHECK(nat_all(NatSet::all()));
    CHECK(nat_finite(NatSet::finite({1, 3, 8})));
    CHECK(nat_cofinite(NatSet::from_threshold(9)));
    CHECK(nat_infinite(NatSet::from_samples(0, 2, {1, 0})));
    CHECK_FALSE(nat_finite(NatSet::from_samples(0, 2, {1, 0})));
    CHECK_FALSE(nat_cofinite(NatSet::from_samples(0, 2, {1, 0})));
  }

  TEST_CASE("min, enumeration, residue classes") {
    NatSet s = NatSet::from_samples(2, 3, {0, 0, 0, 1, 0});  // {3,6,9,...} shifted? check
    CHECK(nat_min(NatSet::from_threshold(4)) == 4);
    CHECK(nat_min(NatSet::finite({5, 2})) == 2);
    auto mem = nat_members_up_to(NatSet::finite({1, 3, 8}), 10);
    CHECK(mem == std::vector<std::uint64_t>{1, 3, 8});
    NatSet evens = NatSet::from_samples(0, 2, {1, 0});
    NatSet zero_mod4 = nat_residue_class(evens, 4, 0);
    CHECK(zero_mod4.member(4));
    CHECK_FALSE(zero_mod4.member(2));
    (void)s;
  }

  TEST_CASE("lcm guard") {
    CHECK(nat_lcm(4, 6) == 12);
    CHECK_THROWS(nat_lcm(1u << 16, (1u << 16) - 1));
  }

  TEST_CASE("describe strings are frozen") {
    CHECK(nat_describe(NatSet::all()) == "{0+1k}");
    CHECK(nat_describe(NatSet::empty_set()) == "{}");
    CHECK(nat_describe(NatSet::finite({1, 3})) == "{1,3}");
    CHECK(nat_describe(NatSet::from_threshold(3)) == "{3+1k}");
    CHECK(nat_describe(NatSet::from_samples(0, 2, {1, 0})) == "{0+2k}");
  }
}
