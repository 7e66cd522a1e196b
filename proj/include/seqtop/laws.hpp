#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "seqtop/enumeration.hpp"
#include "seqtop/limit_op.hpp"

namespace seqtop {

struct LawCheck {
  std::string name;
  bool hypothesis_met = false;
  bool pass = true;  // vacuously true when the hypothesis is not met
  std::string details;
};

struct LawReport {
  std::vector<LawCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (c.hypothesis_met && !c.pass) return false;
    return true;
  }
};

// Structural laws tying an operator, its derived topology, its separating
// modification and its iterates together.  D must be a valid domain
// designation for the derived topology.  `maximality_enum_cap` bounds the
// ground size for the exhaustive largest-conforming-operator check; larger
// grounds report that check as hypothesis-not-met.
LawReport check_operator_laws(const TailLimitOperator& op, Mask d, int maximality_enum_cap = 3);

struct DensityCheck {
  bool covered = false;          // every outside point is a limit of a domain profile
  bool covered_stably = false;   // ... by a profile whose limits survive the separating modification
  bool dense_base = false;       // domain dense in the topology
  bool dense_refined = false;    // domain dense in the separating refinement
  bool pass = true;
};

// Density consequences of outside points being limits of domain profiles,
// evaluated for a topology and a valid domain designation.
DensityCheck check_density_law(const FinTopology& t, Mask d);

// One exhaustive pass over every topology on n labeled points and every valid
// domain designation: the refinement must be finer, separating, minimal and
// unique, must restrict to the same subspace topology on the domain, and must
// coincide with the topology derived from the starred associated operator.
struct SweepStats {
  std::uint64_t topologies = 0;
  std::uint64_t designations = 0;
  std::uint64_t counterexamples = 0;
  std::vector<std::string> failures;  // first few counterexample descriptions
};
SweepStats sweep_separation(int n, int max_enum = kMaxExhaustiveEnum);

}  // namespace seqtop
