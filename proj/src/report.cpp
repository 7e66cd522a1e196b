#include "seqtop/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "seqtop/errors.hpp"

namespace seqtop {

namespace {

// ---------------------------------------------------------------------------
// Atom encoding: split the naturals (per family) into cells on which every
// listed set is constant, so subset tests against unions become bitset ops.

struct AtomBits {
  int words = 0;
  std::vector<std::vector<std::uint64_t>> bits;  // [set][word]

  bool subset_of_union(int a, const std::vector<std::uint64_t>& u) const {
    for (int w = 0; w < words; ++w)
      if (bits[a][w] & ~u[w]) return false;
    return true;
  }
};

AtomBits atomize(const std::vector<const SymbolicSet*>& sets, int n_cores, size_t n_fams) {
  const int n = static_cast<int>(sets.size());
  std::vector<std::vector<char>> memb(n);
  auto add_atom = [&](const std::vector<char>& sig) {
    for (int i = 0; i < n; ++i) memb[i].push_back(sig[i]);
  };
  for (int ci = 0; ci < n_cores; ++ci) {
    std::vector<char> sig(n);
    for (int i = 0; i < n; ++i) sig[i] = has(sets[i]->core, ci) ? 1 : 0;
    add_atom(sig);
  }
  for (size_t f = 0; f < n_fams; ++f) {
    std::uint32_t t = 0, k = 1;
    for (int i = 0; i < n; ++i) {
      t = std::max(t, sets[i]->fams[f].T);
      k = nat_lcm(k, sets[i]->fams[f].K);
    }
    std::set<std::vector<char>> seen;
    for (std::uint64_t v = 0; v < t + k; ++v) {
      std::vector<char> sig(n);
      for (int i = 0; i < n; ++i) sig[i] = sets[i]->fams[f].member(v) ? 1 : 0;
      if (seen.insert(sig).second) add_atom(sig);
    }
  }
  AtomBits out;
  const int n_atoms = n == 0 ? 0 : static_cast<int>(memb[0].size());
  out.words = (n_atoms + 63) / 64;
  out.bits.assign(n, std::vector<std::uint64_t>(out.words, 0));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n_atoms; ++a)
      if (memb[i][a]) out.bits[i][a / 64] |= std::uint64_t{1} << (a % 64);
  return out;
}

// Profile-limit table over the given points: x lies in the row of profile B
// when each nonempty side of x's pair is contained in every member's side and
// no listed pair owns a strictly larger side inside the member union.
TailLimitOperator arena_op(GroundSet g, const std::vector<ArenaPoint>& pts, int n_cores,
                           size_t n_fams) {
  const int n = static_cast<int>(pts.size());
  std::vector<const SymbolicSet*> pasts, futures;
  for (const auto& p : pts) {
    pasts.push_back(&p.pair.past);
    futures.push_back(&p.pair.future);
  }
  AtomBits ap = atomize(pasts, n_cores, n_fams);
  AtomBits af = atomize(futures, n_cores, n_fams);

  std::vector<Mask> sub_p(n, 0), sub_f(n, 0);
  std::vector<std::vector<int>> thr_p(n), thr_f(n);
  std::vector<char> ep(n), ef(n);
  for (int x = 0; x < n; ++x) {
    ep[x] = sym_is_empty(pts[x].pair.past) ? 1 : 0;
    ef[x] = sym_is_empty(pts[x].pair.future) ? 1 : 0;
    for (int a = 0; a < n; ++a) {
      if (sym_subset(pts[x].pair.past, pts[a].pair.past)) sub_p[x] |= bit(a);
      if (sym_subset(pts[x].pair.future, pts[a].pair.future)) sub_f[x] |= bit(a);
      if (sym_proper_subset(pts[x].pair.past, pts[a].pair.past)) thr_p[x].push_back(a);
      if (sym_proper_subset(pts[x].pair.future, pts[a].pair.future)) thr_f[x].push_back(a);
    }
  }

  std::vector<Mask> table(size_t{1} << n, 0);
  std::vector<std::uint64_t> up(ap.words), uf(af.words);
  const Mask full = g.full();
  for (Mask b = 1; b <= full; ++b) {
    std::fill(up.begin(), up.end(), 0);
    std::fill(uf.begin(), uf.end(), 0);
    for (Mask rest = b; rest;) {
      int a = std::countr_zero(rest);
      rest &= rest - 1;
      for (int w = 0; w < ap.words; ++w) up[w] |= ap.bits[a][w];
      for (int w = 0; w < af.words; ++w) uf[w] |= af.bits[a][w];
    }
    Mask row = 0;
    for (int x = 0; x < n; ++x) {
      if (!ep[x]) {
        if (b & ~sub_p[x]) continue;
        bool threatened = false;
        for (int q : thr_p[x])
          if (ap.subset_of_union(q, up)) {
            threatened = true;
            break;
          }
        if (threatened) continue;
      }
      if (!ef[x]) {
        if (b & ~sub_f[x]) continue;
        bool threatened = false;
        for (int q : thr_f[x])
          if (af.subset_of_union(q, uf)) {
            threatened = true;
            break;
          }
        if (threatened) continue;
      }
      row |= bit(x);
    }
    table[b] = row;
  }
  return make_operator(std::move(g), std::move(table));
}

// ---------------------------------------------------------------------------

std::string fam_point_name(const ChronoModel& m, int f, std::uint64_t k) {
  return m.families[f] + "(" + std::to_string(k) + ")";
}

// Closes a neighborhood assignment so that "contains the neighborhood of each
// of its points" defines a topology; mirrors the construction used when
// building a topology from minimal neighborhoods, without enumerating opens.
std::vector<Mask> close_nbhd(std::vector<Mask> nb) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t p = 0; p < nb.size(); ++p) {
      Mask grow = nb[p];
      for (int q : indices_of(nb[p])) grow |= nb[q];
      if (grow != nb[p]) {
        nb[p] = grow;
        changed = true;
      }
    }
  }
  return nb;
}

struct SeqInfo {
  std::string name;
  PairSequence seq;
  bool manifold_valued = false;
  LimitSet lim;
  StarResult star;
};

bool pair_is_manifold_point(const Completion& c, const IdealPair& p) {
  for (int i = 0; i < c.model.n_cores(); ++i)
    if (c.core_pasts[i] == p.past && c.core_futures[i] == p.future) return true;
  for (size_t f = 0; f < c.model.n_fams(); ++f) {
    NatSet k = nat_intersect(fam_past_equals(c.model, static_cast<int>(f), p.past),
                             fam_past_equals(c.rev, static_cast<int>(f), p.future));
    if (!nat_empty(k)) return true;
  }
  return false;
}

// Catalog pairs whose past strictly contains `p` yet fits inside `li`.
bool bigger_past_inside(const Completion& c, const SymbolicSet& p, const SymbolicSet& li,
                        std::string* who) {
  for (int j = 0; j < c.model.n_cores(); ++j)
    if (sym_proper_subset(p, c.core_pasts[j]) && sym_subset(c.core_pasts[j], li)) {
      if (who) *who = "point " + c.model.core.label(j);
      return true;
    }
  for (const auto& b : c.boundary)
    if (sym_proper_subset(p, b.past) && sym_subset(b.past, li)) {
      if (who) *who = "pair " + b.name;
      return true;
    }
  for (size_t f = 0; f < c.model.n_fams(); ++f) {
    NatSet within = fam_past_within(c.model, static_cast<int>(f), li);
    NatSet contain = fam_past_contains(c.model, static_cast<int>(f), p);
    NatSet equal = fam_past_equals(c.model, static_cast<int>(f), p);
    NatSet hits = nat_intersect(within, nat_diff(contain, equal));
    if (!nat_empty(hits)) {
      if (who)
        *who = "point " + fam_point_name(c.model, static_cast<int>(f), nat_min(hits));
      return true;
    }
  }
  return false;
}

bool bigger_future_inside(const Completion& c, const SymbolicSet& fset, const SymbolicSet& li,
                          std::string* who) {
  for (int j = 0; j < c.model.n_cores(); ++j)
    if (sym_proper_subset(fset, c.core_futures[j]) && sym_subset(c.core_futures[j], li)) {
      if (who) *who = "point " + c.model.core.label(j);
      return true;
    }
  for (const auto& b : c.boundary)
    if (sym_proper_subset(fset, b.future) && sym_subset(b.future, li)) {
      if (who) *who = "pair " + b.name;
      return true;
    }
  for (size_t f = 0; f < c.model.n_fams(); ++f) {
    NatSet within = fam_past_within(c.rev, static_cast<int>(f), li);
    NatSet contain = fam_past_contains(c.rev, static_cast<int>(f), fset);
    NatSet equal = fam_past_equals(c.rev, static_cast<int>(f), fset);
    NatSet hits = nat_intersect(within, nat_diff(contain, equal));
    if (!nat_empty(hits)) {
      if (who)
        *who = "point " + fam_point_name(c.model, static_cast<int>(f), nat_min(hits));
      return true;
    }
  }
  return false;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

Arena build_arena(const Completion& c, int max_points) {
  const int nc = c.model.n_cores();
  const int nf = static_cast<int>(c.model.n_fams());
  const int nb = static_cast<int>(c.boundary.size());
  int rank;
  if (nc + 2 * nf + nb <= max_points)
    rank = 1;
  else if (nc + nf + nb <= max_points)
    rank = 0;
  else
    throw CapacityError("pair arena needs " + std::to_string(nc + nf + nb) +
                        " points; the operator table holds " + std::to_string(max_points));

  Arena a;
  a.rank = rank;
  std::vector<std::string> names;
  for (int i = 0; i < nc; ++i) {
    ArenaPoint p;
    p.core = i;
    p.name = c.model.core.label(i);
    p.pair = {c.core_pasts[i], c.core_futures[i]};
    if (sym_is_empty(p.pair.past) && sym_is_empty(p.pair.future))
      throw PreconditionError("point " + p.name + " has no chronology relations at all");
    names.push_back(p.name);
    a.points.push_back(std::move(p));
  }
  for (int f = 0; f < nf; ++f)
    for (int k = 0; k <= rank; ++k) {
      ArenaPoint p;
      p.fam = f;
      p.idx = static_cast<std::uint64_t>(k);
      p.name = fam_point_name(c.model, f, p.idx);
      p.pair = {past_of_fam(c.model, f, p.idx), past_of_fam(c.rev, f, p.idx)};
      if (sym_is_empty(p.pair.past) && sym_is_empty(p.pair.future))
        throw PreconditionError("point " + p.name + " has no chronology relations at all");
      names.push_back(p.name);
      a.points.push_back(std::move(p));
    }
  for (int b = 0; b < nb; ++b) {
    ArenaPoint p;
    p.bd = b;
    p.name = c.boundary[b].name;
    p.pair = {c.boundary[b].past, c.boundary[b].future};
    names.push_back(p.name);
    a.points.push_back(std::move(p));
  }
  a.ground = GroundSet(names);
  for (int x = 0; x < static_cast<int>(a.points.size()); ++x)
    if (a.points[x].bd < 0) a.manifold |= bit(x);
  a.op = arena_op(a.ground, a.points, nc, static_cast<size_t>(nf));
  return a;
}

const ClaimResult* AdmissibilityReport::find(const std::string& name) const {
  for (const auto& cl : claims)
    if (cl.name == name) return &cl;
  return nullptr;
}

Verdict AdmissibilityReport::verdict_of(const std::string& name) const {
  const ClaimResult* cl = find(name);
  return cl ? cl->verdict : Verdict::Undecided;
}

bool AdmissibilityReport::all_passed() const {
  for (const auto& cl : claims)
    if (cl.gating && cl.verdict == Verdict::No) return false;
  return true;
}

bool AdmissibilityReport::fully_decided() const {
  for (const auto& cl : claims)
    if (cl.gating && cl.verdict == Verdict::Undecided) return false;
  return true;
}

AdmissibilityReport admissibility_report(const Completion& c,
                                         const std::vector<NamedSequence>& catalog) {
  AdmissibilityReport rep;
  rep.arena = build_arena(c);
  const Arena& A = rep.arena;
  const int n = static_cast<int>(A.points.size());
  const Mask full = A.ground.full();
  const Mask manifold = A.manifold;

  rep.tau_base = derived_topology(A.op);

  std::vector<Mask> g = union_over_subprofiles(A.op);
  std::vector<Mask> star_table(A.op.table.size(), 0), dd_table(A.op.table.size(), 0);
  for (Mask b = 1; b <= full; ++b) {
    star_table[b] = (g[b] & manifold) ? (A.op.table[b] & manifold) : A.op.table[b];
    Mask row = A.op.table[b];
    dd_table[b] = ((row & manifold) && (row & ~manifold & full)) ? (row & ~manifold) : row;
  }
  TailLimitOperator op_star{A.ground, std::move(star_table)};
  TailLimitOperator op_dd{A.ground, std::move(dd_table)};
  rep.tau_star = derived_topology(op_star);
  rep.tau_double = derived_topology(op_dd);

  // Manifold-side reference topology: the same construction run on the
  // manifold points alone.
  std::vector<ArenaPoint> mpts;
  std::vector<std::string> mnames;
  for (int x = 0; x < n; ++x)
    if (A.points[x].bd < 0) {
      mpts.push_back(A.points[x]);
      mnames.push_back(A.points[x].name);
    }
  FinTopology tau_m = derived_topology(
      arena_op(GroundSet(mnames), mpts, c.model.n_cores(), c.model.n_fams()));

  // ---- test sequences: supplied ones plus the generating chains -----------
  std::vector<SeqInfo> seqs;
  for (const auto& nsq : catalog) {
    SeqInfo si;
    si.name = nsq.name;
    si.seq = nsq.seq;
    if (nsq.seq.fam >= 0) {
      si.manifold_valued = true;
    } else {
      si.manifold_valued = true;
      for (const auto& p : nsq.seq.cycle)
        if (!pair_is_manifold_point(c, p)) si.manifold_valued = false;
    }
    seqs.push_back(std::move(si));
  }
  struct ChainRef {
    int endpoint;  // index into tips or tifs
    bool tip;
    int seq;  // index into seqs
  };
  std::vector<ChainRef> chains;
  auto add_chain = [&](const ChronoModel::Endpoint& e, bool tip_side, int idx) {
    int f = e.gen_fam;
    NatSet j = e.gen_indices;
    if (f < 0) {
      const ChronoModel& side = tip_side ? c.model : c.rev;
      for (size_t cand = 0; cand < c.model.n_fams(); ++cand) {
        NatSet part = e.set.fams[cand];
        if (!nat_infinite(part)) continue;
        SymbolicSet chain = sym_make(c.model.n_fams());
        chain.fams[cand] = part;
        if (past_of_set(side, chain) == e.set) {
          f = static_cast<int>(cand);
          j = part;
          break;
        }
      }
    }
    if (f < 0) return;  // no generator found; endpoint claim will flag this
    SeqInfo si;
    si.name = std::string("chain:") + e.name;
    si.seq.fam = f;
    si.seq.indices = j;
    si.manifold_valued = true;
    chains.push_back({idx, tip_side, static_cast<int>(seqs.size())});
    seqs.push_back(std::move(si));
  };
  for (size_t i = 0; i < c.model.tips.size(); ++i)
    add_chain(c.model.tips[i], true, static_cast<int>(i));
  for (size_t i = 0; i < c.model.tifs.size(); ++i)
    add_chain(c.model.tifs[i], false, static_cast<int>(i));
  for (const auto& bp : c.boundary) {
    SeqInfo si;
    si.name = "const:" + bp.name;
    si.seq.fam = -1;
    si.seq.cycle.push_back({bp.past, bp.future});
    si.manifold_valued = false;
    seqs.push_back(std::move(si));
  }

  if (seqs.empty())
    throw PreconditionError("admissibility report needs at least one test sequence");

  for (auto& si : seqs) {
    si.star = chron_star(c, si.seq);
    si.lim = si.star.base;
  }

  auto add_claim = [&](std::string name, Verdict v, std::string detail, bool gating = true) {
    rep.claims.push_back({std::move(name), v, std::move(detail), gating});
  };

  // ---- chronology sets open ----------------------------------------------
  {
    std::vector<std::string> bad;
    for (int x = 0; x < n; ++x) {
      Mask iplus = 0, iminus = 0;
      for (int y = 0; y < n; ++y) {
        if (!sym_is_empty(sym_intersect(A.points[x].pair.future, A.points[y].pair.past)))
          iplus |= bit(y);
        if (!sym_is_empty(sym_intersect(A.points[y].pair.future, A.points[x].pair.past)))
          iminus |= bit(y);
      }
      if (!rep.tau_base.is_open(iplus))
        bad.push_back("future of " + A.points[x].name);
      if (!rep.tau_base.is_open(iminus))
        bad.push_back("past of " + A.points[x].name);
    }
    add_claim("chronology-sets-open", bad.empty() ? Verdict::Yes : Verdict::No,
              bad.empty() ? "every pair past/future is open in the derived topology"
                          : "not open: " + join(bad, ", "));
  }

  // ---- empty components force maximal one-sided limits --------------------
  {
    std::vector<std::string> bad;
    for (const auto& si : seqs) {
      LimitStats st = sequence_stats(c, si.seq);
      auto check_pair = [&](const std::string& label, const SymbolicSet& past,
                            const SymbolicSet& future) {
        std::string who;
        if (sym_is_empty(future) && bigger_past_inside(c, past, st.li_past, &who))
          bad.push_back(si.name + ": " + label + " is undercut by " + who);
        if (sym_is_empty(past) && bigger_future_inside(c, future, st.li_future, &who))
          bad.push_back(si.name + ": " + label + " is undercut by " + who);
      };
      for (int b : si.lim.boundary)
        check_pair("pair " + c.boundary[b].name, c.boundary[b].past, c.boundary[b].future);
      for (int i : indices_of(si.lim.cores))
        check_pair("point " + c.model.core.label(i), c.core_pasts[i], c.core_futures[i]);
      for (size_t f = 0; f < c.model.n_fams(); ++f) {
        NatSet empties = nat_diff(si.lim.fams[f], c.nonempty_future[f]);
        for (std::uint64_t k : nat_members_up_to(empties, c.window))
          check_pair("point " + fam_point_name(c.model, static_cast<int>(f), k),
                     past_of_fam(c.model, static_cast<int>(f), k), sym_make(c.model.n_fams()));
        NatSet pempties = nat_diff(si.lim.fams[f], c.nonempty_past[f]);
        for (std::uint64_t k : nat_members_up_to(pempties, c.window))
          check_pair("point " + fam_point_name(c.model, static_cast<int>(f), k),
                     sym_make(c.model.n_fams()), past_of_fam(c.rev, static_cast<int>(f), k));
      }
    }
    add_claim("empty-component-compatibility", bad.empty() ? Verdict::Yes : Verdict::No,
              bad.empty() ? "no one-sided limit is undercut inside its eventual intersection"
                          : join(bad, "; "));
  }

  // ---- cross separation, before and after the modification ----------------
  {
    std::vector<std::string> mixed;
    for (const auto& si : seqs)
      if (si.lim.any_manifold() && si.lim.any_boundary())
        mixed.push_back(si.name + " -> " + describe_limit_set(c, si.lim));
    bool arena_ok = cross_separated(rep.tau_base, rep.tau_base, manifold);
    Verdict v = (mixed.empty() && arena_ok) ? Verdict::Yes : Verdict::No;
    std::string detail;
    if (!mixed.empty())
      detail = "mixed limit sets: " + join(mixed, "; ");
    else if (!arena_ok)
      detail = "arena topology cannot split some interior point from some pair";
    else
      detail = "no sequence mixes interior and pair limits; arena separation holds";
    add_claim("cross-separation-base", v, detail, /*gating=*/false);

    std::vector<std::string> mixed2;
    for (const auto& si : seqs)
      if (si.star.starred.any_manifold() && si.star.starred.any_boundary())
        mixed2.push_back(si.name + " -> " + describe_limit_set(c, si.star.starred));
    bool arena_ok2 = cross_separated(rep.tau_base, rep.tau_star, manifold);
    Verdict v2 = (mixed2.empty() && arena_ok2) ? Verdict::Yes : Verdict::No;
    std::string detail2;
    if (!mixed2.empty())
      detail2 = "modified limit sets still mixed: " + join(mixed2, "; ");
    else if (!arena_ok2)
      detail2 = "modified arena topology still fails to split some interior point from some pair";
    else
      detail2 = "modified limits never mix; base-vs-modified arena separation holds";
    add_claim("cross-separation-starred", v2, detail2);
  }

  // ---- terminal chains land exactly on their endpoint pairs ---------------
  {
    std::vector<std::string> bad;
    std::vector<char> seen_tip(c.model.tips.size(), 0), seen_tif(c.model.tifs.size(), 0);
    for (const auto& ch : chains) {
      const SeqInfo& si = seqs[ch.seq];
      const auto& e = ch.tip ? c.model.tips[ch.endpoint] : c.model.tifs[ch.endpoint];
      (ch.tip ? seen_tip : seen_tif)[ch.endpoint] = 1;
      std::vector<int> expect;
      for (int b = 0; b < static_cast<int>(c.boundary.size()); ++b) {
        const auto& bp = c.boundary[b];
        if ((ch.tip ? bp.past : bp.future) == e.set) expect.push_back(b);
      }
      bool pure = !si.lim.any_manifold();
      bool match = si.lim.boundary == expect;
      bool star_same = si.star.starred == si.lim;
      if (!(pure && match && star_same))
        bad.push_back(si.name + " -> " + describe_limit_set(c, si.lim) +
                      (star_same ? "" : " (changed by the modification)"));
    }
    for (size_t i = 0; i < seen_tip.size(); ++i)
      if (!seen_tip[i]) bad.push_back("no generating chain found for " + c.model.tips[i].name);
    for (size_t i = 0; i < seen_tif.size(); ++i)
      if (!seen_tif[i]) bad.push_back("no generating chain found for " + c.model.tifs[i].name);
    add_claim("terminal-chain-endpoint", bad.empty() ? Verdict::Yes : Verdict::No,
              bad.empty() ? "every generating chain converges exactly to its endpoint pairs"
                          : join(bad, "; "));
  }

  // ---- boundary closed ----------------------------------------------------
  add_claim("boundary-closed", rep.tau_base.is_open(manifold) ? Verdict::Yes : Verdict::No,
            rep.tau_base.is_open(manifold)
                ? "the pair set is closed (interior open) in the derived topology"
                : "the interior is not open in the derived topology");

  // ---- density of the interior -------------------------------------------
  {
    std::vector<std::string> bad;
    for (int b = 0; b < static_cast<int>(c.boundary.size()); ++b) {
      bool hit = false;
      std::string by;
      for (const auto& si : seqs) {
        if (!si.manifold_valued) continue;
        if (std::find(si.lim.boundary.begin(), si.lim.boundary.end(), b) !=
            si.lim.boundary.end()) {
          hit = true;
          by = si.name;
          break;
        }
      }
      if (!hit) bad.push_back(c.boundary[b].name + " is not a limit of any interior sequence");
    }
    add_claim("manifold-dense", bad.empty() ? Verdict::Yes : Verdict::No,
              bad.empty() ? "every pair is a limit of an interior-valued test sequence"
                          : join(bad, "; "));
  }

  // ---- interior subspace topology preserved -------------------------------
  {
    bool base_ok = subspace(rep.tau_base, manifold) == tau_m;
    bool star_ok = subspace(rep.tau_star, manifold) == tau_m;
    bool dd_ok = subspace(rep.tau_double, manifold) == tau_m;
    add_claim("manifold-subspace-base", base_ok ? Verdict::Yes : Verdict::No,
              base_ok ? "subspace topology on the interior matches the interior-only operator"
                      : "subspace topology on the interior differs from the interior-only operator");
    add_claim("manifold-subspace-starred", star_ok ? Verdict::Yes : Verdict::No,
              star_ok ? "the manifold-first modification leaves the interior subspace unchanged"
                      : "the manifold-first modification disturbs the interior subspace");

    // The boundary-first variant keeps only pair limits whenever a limit set is
    // mixed, so it discards interior limits exactly on the mixed sequences.
    std::vector<std::string> dropped;
    for (const auto& si : seqs)
      if (si.lim.any_manifold() && si.lim.any_boundary()) {
        LimitSet interior = si.lim;
        interior.boundary.clear();
        dropped.push_back(si.name + " loses " + describe_limit_set(c, interior));
      }
    std::string dd_note = dd_ok ? " (arena subspace comparison agrees)"
                                : " (arena subspace comparison also differs)";
    add_claim("manifold-subspace-double-starred",
              dropped.empty() ? Verdict::Yes : Verdict::No,
              dropped.empty()
                  ? "the boundary-first variant never discards an interior limit" + dd_note
                  : join(dropped, "; ") + dd_note,
              /*gating=*/false);
  }

  // ---- T1 -----------------------------------------------------------------
  {
    auto fails = t1_failures(rep.tau_base);
    std::vector<std::string> bad;
    for (auto [x, y] : fails)
      bad.push_back(A.points[x].name + " cannot be separated from " + A.points[y].name);
    add_claim("t1-points", fails.empty() ? Verdict::Yes : Verdict::No,
              fails.empty() ? "all points are closed" : join(bad, "; "));
  }

  // ---- minimality of the refinement --------------------------------------
  {
    Verdict v = Verdict::Undecided;
    std::string detail;
    if (n <= 5) {
      SeparationReport sr = verify_minimality(rep.tau_base, rep.tau_star, manifold, 5);
      v = (sr.a_min && sr.unique_minimum) ? Verdict::Yes : Verdict::No;
      detail = sr.a_min ? "exhaustive: no coarser refinement separates"
                        : "exhaustive: a strictly coarser refinement already separates";
      if (sr.a_min && !sr.unique_minimum)
        detail = "exhaustive: minimal but not the unique minimum";
    } else {
      bool minimal = true;
      std::string blocker;
      for (int d : indices_of(manifold)) {
        std::vector<Mask> nb(n);
        for (int q = 0; q < n; ++q)
          nb[q] = rep.tau_base.min_nbhd[q] & ~(manifold & ~bit(d) & ~bit(q));
        nb = close_nbhd(std::move(nb));
        FinTopology cand{A.ground, {}, nb};
        if (!finer_or_equal(rep.tau_base, cand)) continue;
        if (!cross_separated(rep.tau_base, cand, manifold)) continue;
        if (finer_or_equal(cand, rep.tau_star) && !(cand == rep.tau_star)) {
          minimal = false;
          blocker = A.points[d].name;
          break;
        }
      }
      v = minimal ? Verdict::Yes : Verdict::No;
      detail = minimal
                   ? "candidate scan (one separating generator dropped at a time): none coarser"
                   : "dropping the separator of " + blocker + " still separates";
      detail += "; not exhaustive beyond 5 points";
    }
    add_claim("report-minimality", v, detail);
  }

  // ---- notes --------------------------------------------------------------
  rep.notes.push_back(
      "maximality is quantified over the declared catalog (point pasts/futures, terminal "
      "sets, family instances); undeclared ideal sets are assumed absent");
  rep.notes.push_back(
      "test catalog: supplied sequences, generating chains, and one constant sequence per "
      "pair; the full profile sweep over the pair set is carried by the arena operator table");
  rep.notes.push_back("arena truncation: " + std::to_string(n) + " points, " +
                      std::to_string(A.rank + 1) + " representatives per family");
  {
    std::vector<std::string> pairs;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        if (A.points[x].bd < 0 || A.points[y].bd < 0) continue;
        if (rep.tau_base.min_nbhd[x] & rep.tau_base.min_nbhd[y])
          pairs.push_back(A.points[x].name + " ~ " + A.points[y].name);
      }
    if (!pairs.empty())
      rep.notes.push_back("pair-vs-pair separation not required; overlapping neighborhoods: " +
                          join(pairs, ", "));
  }
  if (auto bad = designation_problem(rep.tau_base, manifold))
    rep.notes.push_back("interior designation caveat: " + *bad);
  rep.notes.push_back("arena operator is " + order_of(A.op).describe());
  if (!is_dense(rep.tau_base, manifold))
    rep.notes.push_back(
        "arena-level closure of the interior misses some pair (finite representatives cannot "
        "escape to infinity); density is checked on test sequences instead");

  return rep;
}

std::string format_report(const AdmissibilityReport& r) {
  std::ostringstream out;
  out << "arena: " << r.arena.ground.size() << " points (" << card(r.arena.manifold)
      << " interior, " << (r.arena.ground.size() - card(r.arena.manifold)) << " pairs)\n";
  for (const auto& cl : r.claims) {
    const char* tag = cl.verdict == Verdict::Yes  ? "pass"
                      : cl.verdict == Verdict::No ? (cl.gating ? "FAIL" : "no")
                                                  : "undecided";
    out << "  [" << tag << "] " << cl.name << (cl.gating ? "" : " (diagnostic)") << ": "
        << cl.detail << "\n";
  }
  for (const auto& nt : r.notes) out << "  note: " << nt << "\n";
  return out.str();
}

}  // namespace seqtop
