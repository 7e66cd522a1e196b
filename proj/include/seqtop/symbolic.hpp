#pragma once
#include <vector>

#include "seqtop/natset.hpp"
#include "seqtop/subsets.hpp"

namespace seqtop {

// A point set in a chronological model given by finitely many core points and
// finitely many indexed families: a bitmask over the cores plus one index set
// per family.  All components canonical, so equality is structural.
struct SymbolicSet {
  Mask core = 0;
  std::vector<NatSet> fams;

  bool operator==(const SymbolicSet&) const = default;
};

SymbolicSet sym_make(size_t n_fams);
SymbolicSet sym_full(Mask full_core, size_t n_fams);

SymbolicSet sym_union(const SymbolicSet& a, const SymbolicSet& b);
SymbolicSet sym_intersect(const SymbolicSet& a, const SymbolicSet& b);
SymbolicSet sym_diff(const SymbolicSet& a, const SymbolicSet& b);

bool sym_subset(const SymbolicSet& a, const SymbolicSet& b);
bool sym_is_empty(const SymbolicSet& a);
bool sym_proper_subset(const SymbolicSet& a, const SymbolicSet& b);

}  // namespace seqtop
