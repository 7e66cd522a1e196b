#pragma once
#include <cstddef>
#include <vector>

#include "seqtop/subsets.hpp"

namespace seqtop {

// Default cap for exhaustive topology enumeration; the environment variable
// SEQTOP_MAX_ENUM overrides it at the CLI level.
inline constexpr int kMaxExhaustiveEnum = 5;

// Every topology on n labeled points, as sorted open-set lists.  n is capped at
// `hard_cap` (the family count grows super-exponentially: 1, 4, 29, 355, 6942).
std::vector<std::vector<Mask>> all_topologies(int n, int hard_cap = kMaxExhaustiveEnum);

std::size_t count_topologies(int n, int hard_cap = kMaxExhaustiveEnum);

}  // namespace seqtop
