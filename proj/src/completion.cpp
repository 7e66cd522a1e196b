#include "seqtop/completion.hpp"

#include <algorithm>
#include <functional>

#include "seqtop/errors.hpp"

namespace seqtop {

namespace {

FormulaScale scale_with_set(FormulaScale s, const NatSet& n) {
  s.K = nat_lcm(s.K, n.K);
  s.C = std::max(s.C, static_cast<std::int64_t>(n.T) + 1);
  return s;
}

FormulaScale scale_with_sym(FormulaScale s, const SymbolicSet& set) {
  for (const auto& n : set.fams) s = scale_with_set(s, n);
  return s;
}

// Decides an index-parametric property by exact per-index tests sampled up to
// the completion window, then checks that the tail repeats with the joint
// period before committing to the periodic representation.
NatSet decide_per_index(const Completion& c, const std::function<bool(std::uint64_t)>& test) {
  auto T = static_cast<std::uint32_t>(c.window);
  std::uint32_t K = c.scale.K;
  std::vector<std::uint8_t> sample(T + 2 * K);
  for (std::uint32_t v = 0; v < T + 2 * K; ++v) sample[v] = test(v) ? 1 : 0;
  for (std::uint32_t i = 0; i < K; ++i)
    if (sample[T + i] != sample[T + K + i])
      throw PreconditionError("index analysis window too small");
  sample.resize(T + K);
  return NatSet::from_samples(T, K, sample);
}

struct SideView {
  const ChronoModel* fwd = nullptr;  // chronology whose pasts we scan
  const std::vector<SymbolicSet>* point_sets = nullptr;
  const std::vector<std::vector<NatSet>>* core_in = nullptr;
  std::vector<const SymbolicSet*> terminals;
  std::vector<std::string> terminal_names;
};

SideView past_view(const Completion& c) {
  SideView v;
  v.fwd = &c.model;
  v.point_sets = &c.core_pasts;
  v.core_in = &c.core_in_fam_past;
  for (const auto& t : c.model.tips) {
    v.terminals.push_back(&t.set);
    v.terminal_names.push_back(t.name);
  }
  return v;
}

SideView future_view(const Completion& c) {
  SideView v;
  v.fwd = &c.rev;
  v.point_sets = &c.core_futures;
  v.core_in = &c.core_in_fam_future;
  for (const auto& t : c.model.tifs) {
    v.terminals.push_back(&t.set);
    v.terminal_names.push_back(t.name);
  }
  return v;
}

// Index set {n : s is contained in the past of fam(n)}, with the precomputed
// per-core rows as a fast pre-filter.
NatSet contains_set(const SideView& v, int fam, const SymbolicSet& s) {
  NatSet r = NatSet::all();
  for (int i : indices_of(s.core)) {
    r = nat_intersect(r, (*v.core_in)[i][fam]);
    if (nat_empty(r)) return r;
  }
  const ChronoModel& m = *v.fwd;
  for (size_t h = 0; h < m.n_fams() && !nat_empty(r); ++h) {
    if (nat_empty(s.fams[h])) continue;
    Formula jf = formula_from_natset(s.fams[h], 0);
    NatSet part = elim_forall(Formula::disj({Formula::neg(jf), m.fam_fam[h][fam]}), 0);
    r = nat_intersect(r, part);
  }
  return r;
}

// No ideal set in the catalog lies strictly between s and u.
bool maximal_ideal_in(const Completion& c, const SideView& v, const SymbolicSet& s,
                      const SymbolicSet& u) {
  for (const auto& q : *v.point_sets)
    if (sym_proper_subset(s, q) && sym_subset(q, u)) return false;
  for (const SymbolicSet* t : v.terminals)
    if (sym_proper_subset(s, *t) && sym_subset(*t, u)) return false;
  const ChronoModel& m = *v.fwd;
  for (size_t f = 0; f < m.n_fams(); ++f) {
    NatSet above = contains_set(v, static_cast<int>(f), s);
    if (nat_empty(above)) continue;
    NatSet candidates = nat_intersect(above, fam_past_within(m, static_cast<int>(f), u));
    if (nat_empty(candidates)) continue;
    NatSet equal = nat_intersect(above, fam_past_within(m, static_cast<int>(f), s));
    if (!nat_empty(nat_diff(candidates, equal))) return false;
  }
  return true;
}

bool pair_related(const Completion& c, const SymbolicSet& p, const SymbolicSet& f,
                  const SymbolicSet& up) {
  SideView pv = past_view(c), fv = future_view(c);
  if (!sym_subset(f, up) || !maximal_ideal_in(c, fv, f, up)) return false;
  SymbolicSet df = common_past(c.model, f);
  return sym_subset(p, df) && maximal_ideal_in(c, pv, p, df);
}

}  // namespace

bool s_related(const Completion& c, const SymbolicSet& past, const SymbolicSet& future) {
  if (sym_is_empty(past) || sym_is_empty(future))
    throw PreconditionError("pairing test needs nonempty sides");
  return pair_related(c, past, future, common_past(c.rev, past));
}

bool maximal_past_within(const Completion& c, const SymbolicSet& s, const SymbolicSet& u) {
  return maximal_ideal_in(c, past_view(c), s, u);
}

bool maximal_future_within(const Completion& c, const SymbolicSet& s, const SymbolicSet& u) {
  return maximal_ideal_in(c, future_view(c), s, u);
}

bool has_partner_future(const Completion& c, const SymbolicSet& past) {
  SymbolicSet up = common_past(c.rev, past);
  if (sym_is_empty(up)) return false;
  for (const auto& f : c.core_futures)
    if (!sym_is_empty(f) && pair_related(c, past, f, up)) return true;
  for (const auto& t : c.model.tifs)
    if (pair_related(c, past, t.set, up)) return true;
  for (size_t f = 0; f < c.model.n_fams(); ++f) {
    NatSet ks = decide_per_index(c, [&](std::uint64_t k) {
      SymbolicSet fut = past_of_fam(c.rev, static_cast<int>(f), k);
      return !sym_is_empty(fut) && pair_related(c, past, fut, up);
    });
    if (!nat_empty(ks)) return true;
  }
  return false;
}

bool has_partner_past(const Completion& c, const SymbolicSet& future) {
  SymbolicSet down = common_past(c.model, future);
  if (sym_is_empty(down)) return false;
  SideView pv = past_view(c), fv = future_view(c);
  auto related = [&](const SymbolicSet& p) {
    if (!sym_subset(p, down) || !maximal_ideal_in(c, pv, p, down)) return false;
    SymbolicSet up = common_past(c.rev, p);
    return sym_subset(future, up) && maximal_ideal_in(c, fv, future, up);
  };
  for (const auto& p : c.core_pasts)
    if (!sym_is_empty(p) && related(p)) return true;
  for (const auto& t : c.model.tips)
    if (related(t.set)) return true;
  for (size_t f = 0; f < c.model.n_fams(); ++f) {
    NatSet ks = decide_per_index(c, [&](std::uint64_t k) {
      SymbolicSet p = past_of_fam(c.model, static_cast<int>(f), k);
      return !sym_is_empty(p) && related(p);
    });
    if (!nat_empty(ks)) return true;
  }
  return false;
}

Completion build_completion(const ChronoModel& m) {
  require_valid_model(m);
  Completion c;
  c.model = m;
  c.rev = transpose(m);
  int n = m.n_cores();
  size_t fc = m.n_fams();
  for (int i = 0; i < n; ++i) {
    c.core_pasts.push_back(past_of_core(c.model, i));
    c.core_futures.push_back(past_of_core(c.rev, i));
  }
  c.core_in_fam_past.assign(n, std::vector<NatSet>(fc));
  c.core_in_fam_future.assign(n, std::vector<NatSet>(fc));
  for (int i = 0; i < n; ++i)
    for (size_t f = 0; f < fc; ++f) {
      c.core_in_fam_past[i][f] = compile_unary(m.core_fam[i][f], 1);
      c.core_in_fam_future[i][f] = compile_unary(c.rev.core_fam[i][f], 1);
    }
  for (size_t f = 0; f < fc; ++f) {
    NatSet past_ne = NatSet::empty_set(), future_ne = NatSet::empty_set();
    for (int i = 0; i < n; ++i) {
      past_ne = nat_union(past_ne, c.core_in_fam_past[i][f]);
      future_ne = nat_union(future_ne, c.core_in_fam_future[i][f]);
    }
    for (size_t h = 0; h < fc; ++h) {
      past_ne = nat_union(past_ne, elim_exists(m.fam_fam[h][f], 0));
      future_ne = nat_union(future_ne, elim_exists(c.rev.fam_fam[h][f], 0));
    }
    c.nonempty_past.push_back(past_ne);
    c.nonempty_future.push_back(future_ne);
  }

  FormulaScale sc = model_scale(m);
  for (const auto& t : m.tips) {
    sc = scale_with_sym(sc, t.set);
    sc = scale_with_set(sc, t.gen_indices);
  }
  for (const auto& t : m.tifs) {
    sc = scale_with_sym(sc, t.set);
    sc = scale_with_set(sc, t.gen_indices);
  }
  for (const auto& s : m.sequences) sc = scale_with_set(sc, s.indices);
  c.scale = sc;
  c.window = 2 * tail_threshold(sc) + 2 * sc.K;

  // Boundary assembly: pair the declared terminal sets, fall back to point
  // partners, and leave a lone side open otherwise.
  std::vector<bool> tif_paired(m.tifs.size(), false);
  for (size_t ti = 0; ti < m.tips.size(); ++ti) {
    const auto& tip = m.tips[ti];
    bool paired = false;
    for (size_t ui = 0; ui < m.tifs.size(); ++ui)
      if (s_related(c, tip.set, m.tifs[ui].set)) {
        c.boundary.push_back({tip.name + "|" + m.tifs[ui].name, tip.set, m.tifs[ui].set,
                              static_cast<int>(ti), static_cast<int>(ui)});
        tif_paired[ui] = true;
        paired = true;
      }
    if (paired) continue;
    SymbolicSet up = common_past(c.rev, tip.set);
    for (int i = 0; i < n; ++i)
      if (!sym_is_empty(c.core_futures[i]) &&
          pair_related(c, tip.set, c.core_futures[i], up)) {
        c.boundary.push_back({tip.name + "|" + m.core.label(i), tip.set, c.core_futures[i],
                              static_cast<int>(ti), -1});
        paired = true;
      }
    for (size_t f = 0; f < fc && !paired; ++f) {
      NatSet ks = decide_per_index(c, [&](std::uint64_t k) {
        SymbolicSet fut = past_of_fam(c.rev, static_cast<int>(f), k);
        return !sym_is_empty(fut) && pair_related(c, tip.set, fut, up);
      });
      if (nat_empty(ks)) continue;
      if (nat_infinite(ks))
        throw CapacityError("terminal past " + tip.name +
                            " pairs with infinitely many point futures");
      for (std::uint64_t k : nat_members_up_to(ks, c.window + c.scale.K)) {
        c.boundary.push_back({tip.name + "|" + m.families[f] + "(" + std::to_string(k) + ")",
                              tip.set, past_of_fam(c.rev, static_cast<int>(f), k),
                              static_cast<int>(ti), -1});
        paired = true;
      }
    }
    if (!paired)
      c.boundary.push_back(
          {tip.name + "|-", tip.set, sym_make(fc), static_cast<int>(ti), -1});
  }
  for (size_t ui = 0; ui < m.tifs.size(); ++ui) {
    if (tif_paired[ui]) continue;
    const auto& tif = m.tifs[ui];
    bool paired = false;
    SymbolicSet down = common_past(c.model, tif.set);
    SideView pv = past_view(c), fv = future_view(c);
    auto related = [&](const SymbolicSet& p) {
      if (sym_is_empty(p) || !sym_subset(p, down) || !maximal_ideal_in(c, pv, p, down))
        return false;
      SymbolicSet up = common_past(c.rev, p);
      return sym_subset(tif.set, up) && maximal_ideal_in(c, fv, tif.set, up);
    };
    for (int i = 0; i < n; ++i)
      if (related(c.core_pasts[i])) {
        c.boundary.push_back(
            {m.core.label(i) + "|" + tif.name, c.core_pasts[i], tif.set, -1,
             static_cast<int>(ui)});
        paired = true;
      }
    for (size_t f = 0; f < fc && !paired; ++f) {
      NatSet ks = decide_per_index(
          c, [&](std::uint64_t k) { return related(past_of_fam(c.model, static_cast<int>(f), k)); });
      if (nat_empty(ks)) continue;
      if (nat_infinite(ks))
        throw CapacityError("terminal future " + tif.name +
                            " pairs with infinitely many point pasts");
      for (std::uint64_t k : nat_members_up_to(ks, c.window + c.scale.K)) {
        c.boundary.push_back({m.families[f] + "(" + std::to_string(k) + ")|" + tif.name,
                              past_of_fam(c.model, static_cast<int>(f), k), tif.set, -1,
                              static_cast<int>(ui)});
        paired = true;
      }
    }
    if (!paired)
      c.boundary.push_back({"-|" + tif.name, sym_make(fc), tif.set, -1, static_cast<int>(ui)});
  }

  // Every manifold point's own pair must survive the pairing relation.
  for (int i = 0; i < n; ++i) {
    const SymbolicSet &p = c.core_pasts[i], &f = c.core_futures[i];
    bool ok;
    if (!sym_is_empty(p) && !sym_is_empty(f))
      ok = s_related(c, p, f);
    else if (sym_is_empty(p) && sym_is_empty(f))
      ok = false;
    else if (sym_is_empty(p))
      ok = !has_partner_past(c, f);
    else
      ok = !has_partner_future(c, p);
    if (!ok)
      c.problems.push_back("core " + m.core.label(i) +
                           ": its past/future pair fails the pairing relation");
  }
  for (size_t f = 0; f < fc; ++f) {
    NatSet bad = decide_per_index(c, [&](std::uint64_t k) {
      bool pe = !c.nonempty_past[f].member(k), fe = !c.nonempty_future[f].member(k);
      SymbolicSet p = past_of_fam(c.model, static_cast<int>(f), k);
      SymbolicSet fu = past_of_fam(c.rev, static_cast<int>(f), k);
      if (!pe && !fe) return !s_related(c, p, fu);
      if (pe && fe) return true;
      if (pe) return has_partner_past(c, fu);
      return has_partner_future(c, p);
    });
    if (!nat_empty(bad))
      c.problems.push_back("family " + m.families[f] + "(" + std::to_string(nat_min(bad)) +
                           "): its past/future pair fails the pairing relation");
  }
  return c;
}

// ---------------------------------------------------------------------------
// Ideal-set classification

namespace {

IpReport classify_side(const Completion& c, const ChronoModel& m,
                       const std::vector<const SymbolicSet*>& terminal_sets,
                       const std::vector<std::string>& terminal_names, const char* what,
                       const SymbolicSet& s) {
  IpReport rep;
  if (sym_is_empty(s)) {
    rep.verdict = Verdict::No;
    rep.reason = "the empty set is not an ideal set";
    return rep;
  }
  if (!(past_of_set(m, s) == s)) {
    rep.verdict = Verdict::No;
    rep.reason = std::string("not a ") + what + " set";
    return rep;
  }
  for (int i = 0; i < m.n_cores(); ++i)
    if (past_of_core(m, i) == s) {
      rep.verdict = Verdict::Yes;
      rep.reason = std::string(what) + " of point " + m.core.label(i);
      return rep;
    }
  for (size_t g = 0; g < m.n_fams(); ++g) {
    NatSet agree = fam_past_equals(m, static_cast<int>(g), s);
    if (!nat_empty(agree)) {
      rep.verdict = Verdict::Yes;
      rep.reason = std::string(what) + " of point " + m.families[g] + "(" +
                   std::to_string(nat_min(agree)) + ")";
      return rep;
    }
  }
  for (size_t t = 0; t < terminal_sets.size(); ++t)
    if (*terminal_sets[t] == s) {
      rep.verdict = Verdict::Yes;
      rep.reason = "declared terminal set " + terminal_names[t];
      return rep;
    }
  for (size_t g = 0; g < m.n_fams(); ++g) {
    const NatSet& j = s.fams[g];
    if (!nat_infinite(j)) continue;
    Formula jf0 = formula_from_natset(j, 0);
    Formula jf1 = formula_from_natset(j, 1);
    Formula incomparable = Formula::conj(
        {jf0, jf1, Formula::disj({Formula::diff_ge(0, 1, 1), Formula::diff_ge(1, 0, 1)}),
         Formula::neg(Formula::disj({m.fam_fam[g][g], swap_vars(m.fam_fam[g][g])}))});
    if (!nat_empty(elim_exists(incomparable, 0))) continue;
    SymbolicSet chain = sym_make(m.n_fams());
    chain.fams[g] = j;
    if (past_of_set(m, chain) == s) {
      rep.verdict = Verdict::Yes;
      rep.reason = "generated by the chain " + m.families[g];
      return rep;
    }
  }
  // Directedness: hunt for two members with no common later member inside s.
  std::vector<ModelPoint> pts;
  for (int i : indices_of(s.core)) pts.push_back(ModelPoint::core_pt(i));
  for (size_t g = 0; g < m.n_fams(); ++g)
    for (std::uint64_t k : nat_members_up_to(s.fams[g], c.window))
      pts.push_back(ModelPoint::fam_pt(static_cast<int>(g), k));
  std::vector<std::vector<NatSet>> upper(pts.size(), std::vector<NatSet>(m.n_fams()));
  for (size_t x = 0; x < pts.size(); ++x)
    for (size_t h = 0; h < m.n_fams(); ++h) {
      Formula rel = pts[x].core >= 0
                        ? m.core_fam[pts[x].core][h]
                        : rename_var(substitute(m.fam_fam[pts[x].fam][h], 0, pts[x].idx), 0, 1);
      upper[x][h] = nat_intersect(compile_unary(rel, 1), s.fams[h]);
    }
  for (size_t x = 0; x < pts.size(); ++x)
    for (size_t y = x + 1; y < pts.size(); ++y) {
      bool found = false;
      for (int i : indices_of(s.core))
        if (point_before(m, pts[x], ModelPoint::core_pt(i)) &&
            point_before(m, pts[y], ModelPoint::core_pt(i))) {
          found = true;
          break;
        }
      for (size_t h = 0; h < m.n_fams() && !found; ++h)
        found = !nat_empty(nat_intersect(upper[x][h], upper[y][h]));
      if (!found) {
        rep.verdict = Verdict::No;
        rep.reason = std::string("not directed: ") + describe_point(m, pts[x]) + " and " +
                     describe_point(m, pts[y]) + " have no common later member inside the set";
        return rep;
      }
    }
  rep.verdict = Verdict::Undecided;
  rep.reason = "directed within the analysis window but no generator was identified";
  return rep;
}

}  // namespace

IpReport classify_ip(const Completion& c, const SymbolicSet& p) {
  std::vector<const SymbolicSet*> sets;
  std::vector<std::string> names;
  for (const auto& t : c.model.tips) {
    sets.push_back(&t.set);
    names.push_back(t.name);
  }
  return classify_side(c, c.model, sets, names, "past", p);
}

IpReport classify_if(const Completion& c, const SymbolicSet& f) {
  std::vector<const SymbolicSet*> sets;
  std::vector<std::string> names;
  for (const auto& t : c.model.tifs) {
    sets.push_back(&t.set);
    names.push_back(t.name);
  }
  return classify_side(c, c.rev, sets, names, "future", f);
}

// ---------------------------------------------------------------------------
// Limits

PairSequence resolve_sequence(const Completion& c, const ChronoModel::Sequence& s) {
  PairSequence p;
  if (s.fam >= 0) {
    if (!nat_infinite(s.indices))
      throw PreconditionError("sequence " + s.name + ": index set must be infinite");
    p.fam = s.fam;
    p.indices = s.indices;
    return p;
  }
  if (s.cycle.empty()) throw PreconditionError("sequence " + s.name + ": empty cycle");
  for (const auto& pt : s.cycle)
    p.cycle.push_back({past_of_point(c.model, pt), past_of_point(c.rev, pt)});
  return p;
}

LimitStats sequence_stats(const Completion& c, const PairSequence& s) {
  size_t fc = c.model.n_fams();
  LimitStats st{sym_make(fc), sym_make(fc), sym_make(fc), sym_make(fc)};
  if (s.fam < 0) {
    if (s.cycle.empty()) throw PreconditionError("empty cycle sequence");
    st.li_past = s.cycle[0].past;
    st.ls_past = s.cycle[0].past;
    st.li_future = s.cycle[0].future;
    st.ls_future = s.cycle[0].future;
    for (size_t i = 1; i < s.cycle.size(); ++i) {
      st.li_past = sym_intersect(st.li_past, s.cycle[i].past);
      st.ls_past = sym_union(st.ls_past, s.cycle[i].past);
      st.li_future = sym_intersect(st.li_future, s.cycle[i].future);
      st.ls_future = sym_union(st.ls_future, s.cycle[i].future);
    }
    return st;
  }
  const NatSet& j = s.indices;
  Formula jf = formula_from_natset(j, 1);
  auto fill = [&](const ChronoModel& m, const std::vector<std::vector<NatSet>>& core_in,
                  SymbolicSet& li, SymbolicSet& ls) {
    for (int i = 0; i < m.n_cores(); ++i) {
      const NatSet& in = core_in[i][s.fam];
      if (nat_finite(nat_diff(j, in))) li.core |= bit(i);
      if (nat_infinite(nat_intersect(j, in))) ls.core |= bit(i);
    }
    for (size_t h = 0; h < m.n_fams(); ++h) {
      li.fams[h] = elim_eventually_all(
          Formula::disj({Formula::neg(jf), m.fam_fam[h][s.fam]}), 1);
      ls.fams[h] =
          elim_infinitely_often(Formula::conj({jf, m.fam_fam[h][s.fam]}), 1);
    }
  };
  fill(c.model, c.core_in_fam_past, st.li_past, st.ls_past);
  fill(c.rev, c.core_in_fam_future, st.li_future, st.ls_future);
  return st;
}

bool LimitSet::any_manifold() const {
  if (cores != 0) return true;
  for (const auto& f : fams)
    if (!nat_empty(f)) return true;
  return false;
}

LimitSet limit_set_union(const LimitSet& a, const LimitSet& b) {
  if (a.fams.size() != b.fams.size())
    throw PreconditionError("limit sets over different family lists");
  LimitSet r;
  r.cores = a.cores | b.cores;
  for (size_t i = 0; i < a.fams.size(); ++i) r.fams.push_back(nat_union(a.fams[i], b.fams[i]));
  r.boundary = a.boundary;
  for (int id : b.boundary)
    if (std::find(r.boundary.begin(), r.boundary.end(), id) == r.boundary.end())
      r.boundary.push_back(id);
  std::sort(r.boundary.begin(), r.boundary.end());
  return r;
}

LimitSet limits_from_stats(const Completion& c, const LimitStats& st) {
  SideView pv = past_view(c), fv = future_view(c);
  auto past_ok = [&](const SymbolicSet& p) {
    return sym_is_empty(p) ||
           (sym_subset(p, st.li_past) && maximal_ideal_in(c, pv, p, st.ls_past));
  };
  auto future_ok = [&](const SymbolicSet& f) {
    return sym_is_empty(f) ||
           (sym_subset(f, st.li_future) && maximal_ideal_in(c, fv, f, st.ls_future));
  };
  LimitSet out;
  out.fams.assign(c.model.n_fams(), NatSet::empty_set());
  for (int i = 0; i < c.model.n_cores(); ++i) {
    if (sym_is_empty(c.core_pasts[i]) && sym_is_empty(c.core_futures[i])) continue;
    if (past_ok(c.core_pasts[i]) && future_ok(c.core_futures[i])) out.cores |= bit(i);
  }
  for (size_t f = 0; f < c.model.n_fams(); ++f)
    out.fams[f] = decide_per_index(c, [&](std::uint64_t k) {
      SymbolicSet p = past_of_fam(c.model, static_cast<int>(f), k);
      SymbolicSet fu = past_of_fam(c.rev, static_cast<int>(f), k);
      if (sym_is_empty(p) && sym_is_empty(fu)) return false;
      return past_ok(p) && future_ok(fu);
    });
  for (size_t b = 0; b < c.boundary.size(); ++b)
    if (past_ok(c.boundary[b].past) && future_ok(c.boundary[b].future))
      out.boundary.push_back(static_cast<int>(b));
  return out;
}

LimitSet chron_limit(const Completion& c, const PairSequence& s) {
  return limits_from_stats(c, sequence_stats(c, s));
}

namespace {

LimitSet restrict_limit_set(const LimitSet& l, const LimitSet& keep) {
  LimitSet r;
  r.cores = l.cores & keep.cores;
  for (size_t i = 0; i < l.fams.size(); ++i)
    r.fams.push_back(nat_intersect(l.fams[i], keep.fams[i]));
  for (int id : l.boundary)
    if (std::find(keep.boundary.begin(), keep.boundary.end(), id) != keep.boundary.end())
      r.boundary.push_back(id);
  return r;
}

bool limit_set_intersects(const LimitSet& l, const LimitSet& keep) {
  return !restrict_limit_set(l, keep).empty();
}

std::vector<PairSequence> subsequence_classes(const Completion& c, const PairSequence& s) {
  std::vector<PairSequence> out;
  if (s.fam >= 0) {
    std::uint32_t k = c.scale.K;
    for (std::uint32_t r = 0; r < k; ++r) {
      NatSet cls = nat_residue_class(s.indices, k, r);
      if (!nat_infinite(cls)) continue;
      PairSequence sub;
      sub.fam = s.fam;
      sub.indices = cls;
      out.push_back(std::move(sub));
    }
    return out;
  }
  std::vector<IdealPair> distinct;
  for (const auto& p : s.cycle)
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
  if (distinct.size() > 12) throw CapacityError("cycle profile too large to scan subsequences");
  for (std::uint32_t mask = 1; mask < (1u << distinct.size()); ++mask) {
    PairSequence sub;
    for (size_t i = 0; i < distinct.size(); ++i)
      if (mask & (1u << i)) sub.cycle.push_back(distinct[i]);
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace

StarResult chron_star(const Completion& c, const PairSequence& s) {
  LimitSet manifold;
  manifold.cores = c.model.core.full();
  manifold.fams.assign(c.model.n_fams(), NatSet::all());
  StarResult r;
  r.base = chron_limit(c, s);
  r.manifold_branch = false;
  for (const auto& sub : subsequence_classes(c, s)) {
    if (limit_set_intersects(chron_limit(c, sub), manifold)) {
      r.manifold_branch = true;
      break;
    }
  }
  r.starred = r.manifold_branch ? restrict_limit_set(r.base, manifold) : r.base;
  return r;
}

StarResult chron_double_star(const Completion& c, const PairSequence& s) {
  StarResult r;
  r.base = chron_limit(c, s);
  r.manifold_branch = r.base.any_manifold() && r.base.any_boundary();
  if (r.manifold_branch) {
    LimitSet b;
    b.fams.assign(c.model.n_fams(), NatSet::empty_set());
    b.boundary = r.base.boundary;
    r.starred = std::move(b);
  } else {
    r.starred = r.base;
  }
  return r;
}

IterateResult chron_iterate(const Completion& c, const PairSequence& s, int max_stages) {
  IterateResult res;
  LimitSet cur = chron_limit(c, s);
  res.stages.push_back(cur);
  for (int stage = 2; stage <= max_stages; ++stage) {
    struct Atom {
      bool parametric = false;
      int fam = -1;
      NatSet idx;
      IdealPair pair;
    };
    std::vector<Atom> atoms;
    for (int i : indices_of(cur.cores))
      atoms.push_back({false, -1, NatSet::empty_set(), {c.core_pasts[i], c.core_futures[i]}});
    for (int b : cur.boundary)
      atoms.push_back(
          {false, -1, NatSet::empty_set(), {c.boundary[b].past, c.boundary[b].future}});
    for (size_t f = 0; f < c.model.n_fams(); ++f) {
      NatSet rest = cur.fams[f];
      for (std::uint32_t r = 0; r < c.scale.K; ++r) {
        NatSet cls = nat_residue_class(cur.fams[f], c.scale.K, r);
        if (!nat_infinite(cls)) continue;
        Atom a;
        a.parametric = true;
        a.fam = static_cast<int>(f);
        a.idx = cls;
        atoms.push_back(std::move(a));
        rest = nat_diff(rest, cls);
      }
      for (std::uint64_t k : nat_members_up_to(rest, c.window + c.scale.K))
        atoms.push_back({false,
                         -1,
                         NatSet::empty_set(),
                         {past_of_fam(c.model, static_cast<int>(f), k),
                          past_of_fam(c.rev, static_cast<int>(f), k)}});
    }
    if (atoms.size() > 12)
      throw CapacityError("limit iteration: too many profile atoms");
    LimitSet next = cur;
    size_t fc = c.model.n_fams();
    for (std::uint32_t mask = 1; mask < (1u << atoms.size()); ++mask) {
      LimitStats st;
      bool first = true;
      for (size_t i = 0; i < atoms.size(); ++i) {
        if (!(mask & (1u << i))) continue;
        LimitStats part;
        if (atoms[i].parametric) {
          PairSequence ps;
          ps.fam = atoms[i].fam;
          ps.indices = atoms[i].idx;
          part = sequence_stats(c, ps);
        } else {
          part.li_past = atoms[i].pair.past;
          part.ls_past = atoms[i].pair.past;
          part.li_future = atoms[i].pair.future;
          part.ls_future = atoms[i].pair.future;
        }
        if (first) {
          st = part;
          first = false;
        } else {
          st.li_past = sym_intersect(st.li_past, part.li_past);
          st.ls_past = sym_union(st.ls_past, part.ls_past);
          st.li_future = sym_intersect(st.li_future, part.li_future);
          st.ls_future = sym_union(st.ls_future, part.ls_future);
        }
      }
      if (first) continue;
      next = limit_set_union(next, limits_from_stats(c, st));
    }
    if (next == cur) {
      res.stable_at = static_cast<int>(res.stages.size());
      return res;
    }
    res.stages.push_back(next);
    cur = next;
  }
  throw CapacityError("limit iteration did not stabilize");
}

std::string describe_limit_set(const Completion& c, const LimitSet& l) {
  std::string out = "{";
  bool need_comma = false;
  auto add = [&](const std::string& s) {
    if (need_comma) out += ", ";
    out += s;
    need_comma = true;
  };
  for (int i : indices_of(l.cores)) add("pt:" + c.model.core.label(i));
  for (size_t f = 0; f < l.fams.size(); ++f)
    if (!nat_empty(l.fams[f])) add("pt:" + c.model.families[f] + nat_describe(l.fams[f]));
  for (int b : l.boundary) add("bd:" + c.boundary[b].name);
  return out + "}";
}

}  // namespace seqtop
