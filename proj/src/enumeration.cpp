#include "seqtop/enumeration.hpp"

#include <cstdint>
#include <string>

#include "seqtop/errors.hpp"

namespace seqtop {

namespace {

// A family of subsets of an n-point ground is one bit per subset index; with
// n <= 5 there are at most 32 subsets, so a 64-bit word always suffices.
using Family = std::uint64_t;

Family close_family(Family fam, int n) {
  const int m = 1 << n;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < m; ++a) {
      if (!((fam >> a) & 1)) continue;
      for (int b = a + 1; b < m; ++b) {
        if (!((fam >> b) & 1)) continue;
        Family add = (Family{1} << (a | b)) | (Family{1} << (a & b));
        if ((fam | add) != fam) {
          fam |= add;
          changed = true;
        }
      }
    }
  }
  return fam;
}

void enumerate(Family fam, int from, int n, std::vector<Family>& out) {
  out.push_back(fam);
  const int m = 1 << n;
  for (int s = from; s < m; ++s) {
    if ((fam >> s) & 1) continue;
    Family grown = close_family(fam | (Family{1} << s), n);
    // Canonical extension: accept only when the closure added nothing below s,
    // so every closed family is produced exactly once.
    Family added_below = (grown & ~fam) & ((Family{1} << s) - 1);
    if (added_below == 0) enumerate(grown, s + 1, n, out);
  }
}

}  // namespace

std::vector<std::vector<Mask>> all_topologies(int n, int hard_cap) {
  if (n < 0 || n > hard_cap)
    throw CapacityError("exhaustive topology enumeration is limited to " +
                        std::to_string(hard_cap) + " points");
  const int m = 1 << n;
  Family start = (Family{1} << 0) | (Family{1} << (m - 1));
  std::vector<Family> families;
  enumerate(start, 0, n, families);
  std::vector<std::vector<Mask>> out;
  out.reserve(families.size());
  for (Family f : families) {
    std::vector<Mask> opens;
    for (int s = 0; s < m; ++s)
      if ((f >> s) & 1) opens.push_back(static_cast<Mask>(s));
    out.push_back(std::move(opens));
  }
  return out;
}

std::size_t count_topologies(int n, int hard_cap) { return all_topologies(n, hard_cap).size(); }

}  // namespace seqtop
