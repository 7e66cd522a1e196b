#pragma once
#include <string>

#include "seqtop/chrono.hpp"
#include "seqtop/completion.hpp"

namespace seqtop {

// Transitive reduction of the core-point order, one node per core.
std::string dot_core_order(const ChronoModel& m);

// Whole completion: cores, one node per family, one node per boundary pair,
// with chronology edges (family edges carry their index predicates).
std::string dot_completion(const Completion& c);

}  // namespace seqtop
