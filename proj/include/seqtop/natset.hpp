#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace seqtop {

// Eventually periodic subset of the naturals, canonical form.  Membership of
// v < T is head[v]; membership of v >= T is cycle[v % K] (absolute phase, so
// alignment of two sets never shifts their cycles).  Canonical means K is the
// smallest working period and T the smallest working threshold.
struct NatSet {
  std::uint32_t T = 0;
  std::uint32_t K = 1;
  std::vector<std::uint8_t> head;        // size T
  std::vector<std::uint8_t> cycle = {0};  // size K; default-constructed set is empty

  bool member(std::uint64_t v) const {
    return v < T ? head[static_cast<size_t>(v)] != 0 : cycle[v % K] != 0;
  }
  bool operator==(const NatSet&) const = default;

  static NatSet empty_set();
  static NatSet all();
  static NatSet singleton(std::uint32_t v);
  static NatSet from_threshold(std::uint32_t c);  // { v : v >= c }
  static NatSet finite(const std::vector<std::uint32_t>& values);
  // Builds from a sampled prefix: membership of v in [0, T + K) is sample[v],
  // values beyond follow cycle residues.  Canonicalizes.
  static NatSet from_samples(std::uint32_t threshold, std::uint32_t period,
                             const std::vector<std::uint8_t>& sample);
};

NatSet nat_union(const NatSet& a, const NatSet& b);
NatSet nat_intersect(const NatSet& a, const NatSet& b);
NatSet nat_complement(const NatSet& a);
NatSet nat_diff(const NatSet& a, const NatSet& b);

bool nat_subset(const NatSet& a, const NatSet& b);
bool nat_empty(const NatSet& a);
bool nat_all(const NatSet& a);
bool nat_finite(const NatSet& a);    // only finitely many members
bool nat_cofinite(const NatSet& a);  // all but finitely many naturals
bool nat_infinite(const NatSet& a);

// Smallest member; precondition: nonempty.
std::uint64_t nat_min(const NatSet& a);
std::vector<std::uint64_t> nat_members_up_to(const NatSet& a, std::uint64_t bound);

// Members v of a with v % period == residue.
NatSet nat_residue_class(const NatSet& a, std::uint32_t period, std::uint32_t residue);

// lcm guarded by the supported period bound; throws CapacityError beyond it.
std::uint32_t nat_lcm(std::uint32_t a, std::uint32_t b);

std::string nat_describe(const NatSet& a);  // human-readable, deterministic

}  // namespace seqtop
