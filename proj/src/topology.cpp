#include "seqtop/topology.hpp"

#include <algorithm>

#include "seqtop/enumeration.hpp"

namespace seqtop {

bool FinTopology::is_open(Mask u) const {
  return std::binary_search(opens.begin(), opens.end(), u);
}

static std::vector<Mask> min_nbhds_from_opens(const GroundSet& g, const std::vector<Mask>& opens) {
  std::vector<Mask> nb(g.size(), g.full());
  for (Mask u : opens)
    for (int p : indices_of(u)) nb[p] &= u;
  return nb;
}

std::vector<std::string> topology_violations(const GroundSet& g, const std::vector<Mask>& opens) {
  std::vector<std::string> out;
  auto open = [&](Mask u) { return std::find(opens.begin(), opens.end(), u) != opens.end(); };
  if (!open(0)) out.push_back("empty set is not open");
  if (!open(g.full())) out.push_back("whole space is not open");
  for (Mask u : opens)
    if ((u & ~g.full()) != 0) out.push_back("open set mentions points outside the ground");
  for (size_t i = 0; i < opens.size() && out.size() < 16; ++i)
    for (size_t j = i + 1; j < opens.size() && out.size() < 16; ++j) {
      if (!open(opens[i] | opens[j]))
        out.push_back("union of " + g.format(opens[i]) + " and " + g.format(opens[j]) +
                      " is not open");
      if (!open(opens[i] & opens[j]))
        out.push_back("intersection of " + g.format(opens[i]) + " and " + g.format(opens[j]) +
                      " is not open");
    }
  return out;
}

static FinTopology finish(GroundSet g, std::vector<Mask> opens) {
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  FinTopology t{std::move(g), std::move(opens), {}};
  t.min_nbhd = min_nbhds_from_opens(t.ground, t.opens);
  return t;
}

FinTopology make_topology(GroundSet g, std::vector<Mask> opens) {
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  auto bad = topology_violations(g, opens);
  if (!bad.empty()) throw PreconditionError("not a topology: " + bad.front());
  return finish(std::move(g), std::move(opens));
}

FinTopology topology_from_min_nbhd(GroundSet g, std::vector<Mask> nbhd) {
  const int n = g.size();
  for (int p = 0; p < n; ++p)
    if (!has(nbhd[p], p)) throw PreconditionError("minimal neighborhood misses its own point");
  // U is open exactly when it contains the assigned neighborhood of each of its
  // points; close the assignment first so that property defines a topology.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < n; ++p) {
      Mask grow = nbhd[p];
      for (int q : indices_of(nbhd[p])) grow |= nbhd[q];
      if (grow != nbhd[p]) nbhd[p] = grow, changed = true;
    }
  }
  std::vector<Mask> opens;
  const Mask full = g.full();
  for (Mask u = 0;; ++u) {
    bool ok = true;
    for (int p : indices_of(u))
      if (!subset_of(nbhd[p], u)) {
        ok = false;
        break;
      }
    if (ok) opens.push_back(u);
    if (u == full) break;
  }
  FinTopology t{std::move(g), std::move(opens), std::move(nbhd)};
  return t;
}

FinTopology generate_topology(GroundSet g, const std::vector<Mask>& subbasis) {
  const int n = g.size();
  std::vector<Mask> nb(n, g.full());
  for (Mask s : subbasis) {
    if ((s & ~g.full()) != 0) throw PreconditionError("subbasis set mentions unknown points");
    for (int p : indices_of(s)) nb[p] &= s;
  }
  return topology_from_min_nbhd(std::move(g), std::move(nb));
}

Mask closure(const FinTopology& t, Mask a) {
  Mask out = 0;
  for (int x = 0; x < t.ground.size(); ++x)
    if (t.min_nbhd[x] & a) out |= bit(x);
  return out;
}

bool is_dense(const FinTopology& t, Mask d) { return closure(t, d) == t.ground.full(); }

bool finer_or_equal(const FinTopology& coarse, const FinTopology& fine) {
  for (int p = 0; p < coarse.ground.size(); ++p)
    if (!subset_of(fine.min_nbhd[p], coarse.min_nbhd[p])) return false;
  return true;
}

std::vector<std::pair<int, int>> t1_failures(const FinTopology& t) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < t.ground.size(); ++x)
    for (int y : indices_of(t.min_nbhd[x] & ~bit(x))) out.emplace_back(x, y);
  return out;
}

bool is_T1(const FinTopology& t) { return t1_failures(t).empty(); }

FinTopology subspace(const FinTopology& t, Mask s) {
  std::vector<std::string> labels;
  std::vector<int> old_of_new;
  for (int i = 0; i < t.ground.size(); ++i)
    if (has(s, i)) {
      labels.push_back(t.ground.label(i));
      old_of_new.push_back(i);
    }
  GroundSet g(labels);
  auto compress = [&](Mask m) {
    Mask out = 0;
    for (size_t k = 0; k < old_of_new.size(); ++k)
      if (has(m, old_of_new[k])) out |= bit(static_cast<int>(k));
    return out;
  };
  std::vector<Mask> nb(g.size());
  for (size_t k = 0; k < old_of_new.size(); ++k) nb[k] = compress(t.min_nbhd[old_of_new[k]] & s);
  return topology_from_min_nbhd(std::move(g), std::move(nb));
}

std::optional<std::string> designation_problem(const FinTopology& t, Mask d) {
  if ((d & ~t.ground.full()) != 0) return "designated domain mentions unknown points";
  if (!t.is_open(d)) return "designated domain " + t.ground.format(d) + " is not open";
  for (int p : indices_of(d))
    if ((t.min_nbhd[p] & d) != bit(p))
      return "domain point " + t.ground.label(p) +
             " is not isolated inside the domain (subspace not discrete)";
  return std::nullopt;
}

void require_designation(const FinTopology& t, Mask d) {
  if (auto bad = designation_problem(t, d)) throw PreconditionError(*bad);
}

FinTopology separating_refinement(const FinTopology& t, Mask d) {
  require_designation(t, d);
  const Mask full = t.ground.full();
  std::vector<Mask> sub = t.opens;
  for (int p : indices_of(d)) sub.push_back(full & ~bit(p));
  FinTopology out = generate_topology(t.ground, sub);
  if (card(d) <= 10) {
    // The subbasis of all complements of domain subsets generates the same
    // topology, because each complement is a finite intersection of the
    // single-point complements used above; cross-check on small domains.
    std::vector<Mask> wide = t.opens;
    for_each_submask(d, [&](Mask k) { wide.push_back(full & ~k); });
    FinTopology alt = generate_topology(t.ground, wide);
    if (!(alt == out))
      throw PreconditionError("refinement subbasis forms disagree; internal invariant broken");
  }
  return out;
}

bool cross_separated(const FinTopology& base, const FinTopology& refined, Mask d) {
  const Mask outside = base.ground.full() & ~d;
  for (int p : indices_of(d))
    for (int q : indices_of(outside))
      if (base.min_nbhd[p] & refined.min_nbhd[q]) return false;
  return true;
}

SeparationReport check_separation(const FinTopology& base, const FinTopology& refined, Mask d) {
  SeparationReport r;
  r.a_fin = finer_or_equal(base, refined);
  const Mask outside = base.ground.full() & ~d;
  for (int p : indices_of(d))
    for (int q : indices_of(outside))
      if (base.min_nbhd[p] & refined.min_nbhd[q]) r.cross_t2_failures.emplace_back(p, q);
  r.a_sep = r.cross_t2_failures.empty();
  r.t1_failures = t1_failures(refined);
  return r;
}

SeparationReport verify_minimality(const FinTopology& base, const FinTopology& refined, Mask d,
                                   int max_enum,
                                   const std::vector<std::vector<Mask>>* candidates) {
  SeparationReport r = check_separation(base, refined, d);
  std::vector<std::vector<Mask>> enumerated;
  if (candidates == nullptr) {
    if (base.ground.size() > max_enum)
      throw CapacityError("ground too large for exhaustive minimality check (limit " +
                          std::to_string(max_enum) + "); pass explicit candidates");
    enumerated = all_topologies(base.ground.size());
    candidates = &enumerated;
  }
  r.minimality_checked = true;
  r.a_min = true;
  r.unique_minimum = true;
  for (const auto& opens : *candidates) {
    FinTopology cand = make_topology(base.ground, opens);
    if (cand == refined) continue;
    if (!finer_or_equal(base, cand)) continue;
    if (!cross_separated(base, cand, d)) continue;
    // cand satisfies both conditions; it must strictly contain the refinement.
    if (!finer_or_equal(refined, cand)) {
      r.unique_minimum = false;
      if (r.blocking_topology.empty()) r.blocking_topology = opens;
    }
    if (finer_or_equal(cand, refined)) {  // strictly coarser passing candidate
      r.a_min = false;
      r.blocking_topology = opens;
    }
  }
  if (!r.a_sep || !r.a_fin) r.a_min = false;
  return r;
}

}  // namespace seqtop
