#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqtop/ground.hpp"

namespace seqtop {

// Topology on a finite ground set. `opens` is sorted ascending and deduped;
// `min_nbhd[p]` is the smallest open set containing p (finite intersections of
// opens are open, so it exists and determines the topology completely).
struct FinTopology {
  GroundSet ground;
  std::vector<Mask> opens;
  std::vector<Mask> min_nbhd;

  bool is_open(Mask u) const;
  bool operator==(const FinTopology& o) const {
    return ground == o.ground && min_nbhd == o.min_nbhd;
  }
};

// Validates the axioms; returns human-readable violations (empty when valid).
std::vector<std::string> topology_violations(const GroundSet& g, const std::vector<Mask>& opens);

// Builds a topology from an explicit open-set list, throwing on axiom violations.
FinTopology make_topology(GroundSet g, std::vector<Mask> opens);

// Smallest topology containing every subbasis element.
FinTopology generate_topology(GroundSet g, const std::vector<Mask>& subbasis);

// Rebuilds the open list from a minimal-neighborhood assignment (must be
// reflexive: p in nbhd[p]).
FinTopology topology_from_min_nbhd(GroundSet g, std::vector<Mask> nbhd);

Mask closure(const FinTopology& t, Mask a);
bool is_dense(const FinTopology& t, Mask d);

// True when every open of `coarse` is open in `fine`.
bool finer_or_equal(const FinTopology& coarse, const FinTopology& fine);

// Ordered pairs (x, y), x != y, where every open around x contains y.
std::vector<std::pair<int, int>> t1_failures(const FinTopology& t);
bool is_T1(const FinTopology& t);

// Subspace topology; the new ground keeps the original label order.
FinTopology subspace(const FinTopology& t, Mask s);

// Domain designation: D must be open and discrete in its subspace topology.
// Returns a diagnostic message, or nullopt when the designation is valid.
std::optional<std::string> designation_problem(const FinTopology& t, Mask d);
void require_designation(const FinTopology& t, Mask d);

// Coarsest refinement of `t` whose opens separate D-points from outside points:
// generated by t together with the complements of single D-points.  Equal to
// the topology generated by t plus complements of arbitrary subsets of D.
FinTopology separating_refinement(const FinTopology& t, Mask d);

struct SeparationReport {
  bool a_fin = false;   // base topology contained in refined one
  bool a_sep = false;   // every p in D, q outside D split by disjoint (base, refined) opens
  bool a_min = false;   // no strictly coarser refinement passes both checks above
  bool unique_minimum = false;  // every passing refinement contains this one
  bool minimality_checked = false;
  std::vector<std::pair<int, int>> t1_failures;        // inside the refined topology
  std::vector<std::pair<int, int>> cross_t2_failures;  // (p in D, q outside D)
  std::vector<Mask> blocking_topology;  // witness opens when a_min/uniqueness fails
};

// Pairwise verdicts between an already built base/refined pair.
SeparationReport check_separation(const FinTopology& base, const FinTopology& refined, Mask d);

// Exhaustive minimality check.  When `candidates` is null the ground size must
// be at most `max_enum` (every topology on the ground is tried); otherwise only
// the supplied open-set families are tried.
SeparationReport verify_minimality(const FinTopology& base, const FinTopology& refined, Mask d,
                                   int max_enum,
                                   const std::vector<std::vector<Mask>>* candidates = nullptr);

// Separation between D-points and outside points with opens from two stages:
// the base open around p in D, the refined open around q outside D.
bool cross_separated(const FinTopology& base, const FinTopology& refined, Mask d);

}  // namespace seqtop
