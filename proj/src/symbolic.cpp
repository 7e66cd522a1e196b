#include "seqtop/symbolic.hpp"

#include "seqtop/errors.hpp"

namespace seqtop {

namespace {

void require_same_shape(const SymbolicSet& a, const SymbolicSet& b) {
  if (a.fams.size() != b.fams.size())
    throw PreconditionError("point sets over different family lists");
}

}  // namespace

SymbolicSet sym_make(size_t n_fams) {
  SymbolicSet s;
  s.fams.assign(n_fams, NatSet::empty_set());
  return s;
}

SymbolicSet sym_full(Mask full_core, size_t n_fams) {
  SymbolicSet s;
  s.core = full_core;
  s.fams.assign(n_fams, NatSet::all());
  return s;
}

SymbolicSet sym_union(const SymbolicSet& a, const SymbolicSet& b) {
  require_same_shape(a, b);
  SymbolicSet r;
  r.core = a.core | b.core;
  r.fams.reserve(a.fams.size());
  for (size_t i = 0; i < a.fams.size(); ++i) r.fams.push_back(nat_union(a.fams[i], b.fams[i]));
  return r;
}

SymbolicSet sym_intersect(const SymbolicSet& a, const SymbolicSet& b) {
  require_same_shape(a, b);
  SymbolicSet r;
  r.core = a.core & b.core;
  r.fams.reserve(a.fams.size());
  for (size_t i = 0; i < a.fams.size(); ++i)
    r.fams.push_back(nat_intersect(a.fams[i], b.fams[i]));
  return r;
}

SymbolicSet sym_diff(const SymbolicSet& a, const SymbolicSet& b) {
  require_same_shape(a, b);
  SymbolicSet r;
  r.core = a.core & ~b.core;
  r.fams.reserve(a.fams.size());
  for (size_t i = 0; i < a.fams.size(); ++i) r.fams.push_back(nat_diff(a.fams[i], b.fams[i]));
  return r;
}

bool sym_subset(const SymbolicSet& a, const SymbolicSet& b) {
  require_same_shape(a, b);
  if (!subset_of(a.core, b.core)) return false;
  for (size_t i = 0; i < a.fams.size(); ++i)
    if (!nat_subset(a.fams[i], b.fams[i])) return false;
  return true;
}

bool sym_is_empty(const SymbolicSet& a) {
  if (a.core != 0) return false;
  for (const auto& f : a.fams)
    if (!nat_empty(f)) return false;
  return true;
}

bool sym_proper_subset(const SymbolicSet& a, const SymbolicSet& b) {
  return sym_subset(a, b) && !(a == b);
}

}  // namespace seqtop
