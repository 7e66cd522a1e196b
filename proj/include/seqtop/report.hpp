#pragma once
#include <string>
#include <vector>

#include "seqtop/completion.hpp"
#include "seqtop/limit_op.hpp"

namespace seqtop {

// One point of the finite pair arena: a core point, a family representative,
// or a boundary pair.
struct ArenaPoint {
  int core = -1;
  int fam = -1;
  std::uint64_t idx = 0;
  int bd = -1;
  std::string name;
  IdealPair pair;
};

// Finite vantage object for a completion: every core point, every boundary
// pair, and rank+1 leading representatives per family.  The profile-limit
// operator on it follows the pair-convergence rule (eventual-intersection
// containment plus maximality inside the eventual union), with maximality
// quantified over the arena's own pair catalog.
struct Arena {
  GroundSet ground;
  std::vector<ArenaPoint> points;
  Mask manifold = 0;
  int rank = 0;
  TailLimitOperator op;
};

Arena build_arena(const Completion& c, int max_points = kMaxTable);

struct NamedSequence {
  std::string name;
  PairSequence seq;
};

struct ClaimResult {
  std::string name;
  Verdict verdict = Verdict::Undecided;
  std::string detail;
  bool gating = true;  // diagnostic claims (expected to fail on honest inputs) are non-gating
};

struct AdmissibilityReport {
  Arena arena;
  FinTopology tau_base;    // derived from the arena operator
  FinTopology tau_star;    // manifold-first modification
  FinTopology tau_double;  // boundary-first modification
  std::vector<ClaimResult> claims;
  std::vector<std::string> notes;

  const ClaimResult* find(const std::string& name) const;
  Verdict verdict_of(const std::string& name) const;
  bool all_passed() const;     // no gating claim with verdict No
  bool fully_decided() const;  // no gating claim with verdict Undecided
};

// Evaluates the admissibility claims for the completion: the supplied test
// sequences plus the generating chains of every declared terminal set feed
// the sequence-level checks; the arena carries the topology-level ones.
// Throws PreconditionError when there are no sequences to test at all.
AdmissibilityReport admissibility_report(const Completion& c,
                                         const std::vector<NamedSequence>& catalog);

std::string format_report(const AdmissibilityReport& r);

}  // namespace seqtop
