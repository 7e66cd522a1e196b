#pragma once
#include <string>
#include <utility>
#include <vector>

#include "seqtop/topology.hpp"

namespace seqtop {

inline constexpr int kMaxTable = 20;

// Limit operator on a finite ground set in tail-profile form: a sequence is
// classified by the set of points it visits infinitely often (its tail
// profile), so the operator is a table over nonempty subsets.  Antitone in the
// profile (more tail points = fewer limits), with table[0] fixed to empty.
struct TailLimitOperator {
  GroundSet ground;
  std::vector<Mask> table;  // size 1 << n, indexed by profile mask

  Mask at(Mask profile) const { return table[profile]; }
  bool operator==(const TailLimitOperator& o) const {
    return ground == o.ground && table == o.table;
  }
};

struct OperatorValidation {
  bool antitone = true;
  bool coherent = true;
  std::vector<std::pair<Mask, Mask>> antitone_violations;  // (profile, smaller profile)
  Mask coherence_failures = 0;                             // points x with x not in L({x})
  bool ok() const { return antitone && coherent; }
};

OperatorValidation validate_operator(const TailLimitOperator& op);

// Throws PreconditionError when the table is not antitone or not coherent.
TailLimitOperator make_operator(GroundSet g, std::vector<Mask> table);

// g[A] = union of table[B] over nonempty B contained in A (subset-sum OR).
std::vector<Mask> union_over_subprofiles(const TailLimitOperator& op);

// Topology whose closed sets are exactly the sets stable under the operator.
FinTopology derived_topology(const TailLimitOperator& op);

// Operator of a topology: the limits of a profile are the points whose every
// neighborhood contains the whole profile.
TailLimitOperator associated_operator(const FinTopology& t);

// Restriction to an open-in-derived-topology subset, on the compressed ground.
TailLimitOperator restrict_operator(const TailLimitOperator& op, Mask d);

struct IterationResult {
  std::vector<std::vector<Mask>> tables;  // tables[i] is the (i+1)-th iterate
  int stable_at = 0;                      // smallest k with iterate k == iterate k+1
};

// Transfinite-style iteration truncated at `up_to` steps (0 = run to
// stabilization, which takes at most |ground| steps for coherent operators).
IterationResult iterate_operator(const TailLimitOperator& op, int up_to = 0);

struct OperatorOrder {
  enum class Kind { FirstOrder, KthOrder, NotAnyOrder } kind;
  int k = 1;  // meaningful for KthOrder
  std::string describe() const;
};

OperatorOrder order_of(const TailLimitOperator& op);

// Whether the operator agrees with its derived topology's convergence on
// profiles and limit points drawn from D.
bool first_order_on(const TailLimitOperator& op, Mask d);

// Separating modification: keep only the D-limits whenever some subprofile has
// a limit in D, otherwise leave the row unchanged.  D must be a valid domain
// designation for the derived topology.
TailLimitOperator star_operator(const TailLimitOperator& op, Mask d);

bool pointwise_leq(const TailLimitOperator& smaller, const TailLimitOperator& larger);

}  // namespace seqtop
