#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqtop/chrono.hpp"

namespace seqtop {

// A past set / future set pair; at least one side nonempty wherever it names a
// completion point.
struct IdealPair {
  SymbolicSet past;
  SymbolicSet future;
  bool operator==(const IdealPair&) const = default;
};

// The causal completion of a model: its manifold points (cores concretely,
// families parametrically) together with the boundary pairs assembled from
// the declared terminal sets via the pairing relation (a past and a future
// set are paired when each is a maximal ideal set inside the common past /
// common future of the other).
//
// Maximality scans range over the point pasts, the point futures and the
// declared terminal sets; ideal sets outside that catalog are assumed absent.
struct Completion {
  ChronoModel model;
  ChronoModel rev;  // transposed model; drives every future-side computation

  std::vector<SymbolicSet> core_pasts;
  std::vector<SymbolicSet> core_futures;

  struct BoundaryPair {
    std::string name;
    SymbolicSet past;    // possibly empty
    SymbolicSet future;  // possibly empty
    int tip = -1;        // index into model.tips, -1 when the past side is not declared
    int tif = -1;
  };
  std::vector<BoundaryPair> boundary;

  // Pairing failures for manifold points (their past/future should pair).
  std::vector<std::string> problems;

  FormulaScale scale;     // joint scale incl. endpoint and sequence index sets
  std::uint64_t window;   // sampling threshold for per-index decisions

  // Derived caches filled by build_completion.
  std::vector<std::vector<NatSet>> core_in_fam_past;    // [core][fam]: {n : core < fam(n)}
  std::vector<std::vector<NatSet>> core_in_fam_future;  // [core][fam]: {n : fam(n) < core}
  std::vector<NatSet> nonempty_past;                    // per fam: {n : past of fam(n) nonempty}
  std::vector<NatSet> nonempty_future;
};

Completion build_completion(const ChronoModel& m);

// Exact pairing test for concrete ideal sets (both nonempty).
bool s_related(const Completion& c, const SymbolicSet& past, const SymbolicSet& future);
// Maximality of `s` among catalog past (resp. future) sets confined to `u`.
bool maximal_past_within(const Completion& c, const SymbolicSet& s, const SymbolicSet& u);
bool maximal_future_within(const Completion& c, const SymbolicSet& s, const SymbolicSet& u);
// Partner existence against the full catalog (point sets and terminal sets).
bool has_partner_future(const Completion& c, const SymbolicSet& past);
bool has_partner_past(const Completion& c, const SymbolicSet& future);

enum class Verdict { Yes, No, Undecided };
struct IpReport {
  Verdict verdict = Verdict::Undecided;
  std::string reason;
};
// Is P an ideal past set?  Yes only with a proof (point past, declared
// terminal set, or generating chain); No only with a verified obstruction.
IpReport classify_ip(const Completion& c, const SymbolicSet& p);
IpReport classify_if(const Completion& c, const SymbolicSet& f);

// A test sequence in pair form: instances of one family along an infinite
// index set, or a finite profile of pairs each visited infinitely often.
struct PairSequence {
  int fam = -1;
  NatSet indices = NatSet::all();
  std::vector<IdealPair> cycle;
};

PairSequence resolve_sequence(const Completion& c, const ChronoModel::Sequence& s);

// Eventual intersections / unions of the past and future parts.
struct LimitStats {
  SymbolicSet li_past, ls_past, li_future, ls_future;
};
LimitStats sequence_stats(const Completion& c, const PairSequence& s);

// A set of completion points: manifold cores, family instances (per-family
// index sets) and boundary pairs, all normalized.
struct LimitSet {
  Mask cores = 0;
  std::vector<NatSet> fams;     // one index set per family
  std::vector<int> boundary;    // sorted boundary ids

  bool operator==(const LimitSet&) const = default;
  bool any_manifold() const;
  bool any_boundary() const { return !boundary.empty(); }
  bool empty() const { return !any_manifold() && !any_boundary(); }
};

LimitSet limit_set_union(const LimitSet& a, const LimitSet& b);

// Chronological limits of the sequence: every catalog pair whose nonempty
// sides are contained in the eventual intersection and maximal inside the
// eventual union.
LimitSet chron_limit(const Completion& c, const PairSequence& s);

// Limits relative to the given stats (used for derived profiles).
LimitSet limits_from_stats(const Completion& c, const LimitStats& st);

// The manifold-first modification: if some subsequence has a manifold limit,
// keep only the manifold limits; otherwise unchanged.  Subsequences collapse
// to residue classes (parametric) or sub-profiles (cycles).
struct StarResult {
  LimitSet base;
  LimitSet starred;
  bool manifold_branch = false;
};
StarResult chron_star(const Completion& c, const PairSequence& s);

// The boundary-first variant: when the limit set mixes manifold and boundary
// points, keep only the boundary ones; otherwise unchanged.
StarResult chron_double_star(const Completion& c, const PairSequence& s);

// Closure under taking limits of profiles built from already-obtained limit
// points; stages[0] is the plain limit set.
struct IterateResult {
  std::vector<LimitSet> stages;
  int stable_at = 0;  // 1-based stage index at which the chain stops growing
};
IterateResult chron_iterate(const Completion& c, const PairSequence& s, int max_stages = 8);

std::string describe_limit_set(const Completion& c, const LimitSet& l);

}  // namespace seqtop
