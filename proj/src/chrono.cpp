#include "seqtop/chrono.hpp"

#include <algorithm>
#include <bit>

#include "seqtop/errors.hpp"

namespace seqtop {

int ChronoModel::fam_index(const std::string& name) const {
  for (size_t i = 0; i < families.size(); ++i)
    if (families[i] == name) return static_cast<int>(i);
  return -1;
}

int ChronoModel::fam_require(const std::string& name) const {
  int i = fam_index(name);
  if (i < 0) throw PreconditionError("unknown family '" + name + "'");
  return i;
}

namespace {

void check_structure(const ChronoModel& m) {
  size_t n = static_cast<size_t>(m.n_cores()), fc = m.n_fams();
  bool ok = m.core_core.size() == n && m.core_fam.size() == n && m.fam_core.size() == fc &&
            m.fam_fam.size() == fc;
  for (const auto& row : m.core_core) ok = ok && row.size() == n;
  for (const auto& row : m.core_fam) ok = ok && row.size() == fc;
  for (const auto& row : m.fam_core) ok = ok && row.size() == n;
  for (const auto& row : m.fam_fam) ok = ok && row.size() == fc;
  if (!ok) throw PreconditionError("relation tables do not match the point lists");
  for (const auto& ep : m.tips)
    if (ep.set.fams.size() != fc) throw PreconditionError("endpoint set over wrong family list");
  for (const auto& ep : m.tifs)
    if (ep.set.fams.size() != fc) throw PreconditionError("endpoint set over wrong family list");
}

}  // namespace

ChronoModel transpose(const ChronoModel& m) {
  check_structure(m);
  ChronoModel r;
  r.core = m.core;
  r.families = m.families;
  size_t n = static_cast<size_t>(m.n_cores()), fc = m.n_fams();
  r.core_core.assign(n, std::vector<std::uint8_t>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r.core_core[i][j] = m.core_core[j][i];
  r.core_fam.assign(n, std::vector<Formula>(fc));
  r.fam_core.assign(fc, std::vector<Formula>(n));
  r.fam_fam.assign(fc, std::vector<Formula>(fc));
  for (size_t i = 0; i < n; ++i)
    for (size_t f = 0; f < fc; ++f) {
      // i before' f(n)  <=>  f(n) before i; the original predicate uses slot 0.
      r.core_fam[i][f] = rename_var(m.fam_core[f][i], 0, 1);
      r.fam_core[f][i] = rename_var(m.core_fam[i][f], 1, 0);
    }
  for (size_t f = 0; f < fc; ++f)
    for (size_t g = 0; g < fc; ++g) r.fam_fam[f][g] = swap_vars(m.fam_fam[g][f]);
  r.tips = m.tifs;
  r.tifs = m.tips;
  r.sequences = m.sequences;
  return r;
}

FormulaScale model_scale(const ChronoModel& m) {
  FormulaScale s;
  for (const auto& row : m.core_fam)
    for (const auto& f : row) s = join_scale(s, formula_scale(f));
  for (const auto& row : m.fam_core)
    for (const auto& f : row) s = join_scale(s, formula_scale(f));
  for (const auto& row : m.fam_fam)
    for (const auto& f : row) s = join_scale(s, formula_scale(f));
  return s;
}

bool point_before(const ChronoModel& m, const ModelPoint& x, const ModelPoint& y) {
  if (x.core >= 0 && y.core >= 0) return m.core_core[x.core][y.core] != 0;
  if (x.core >= 0) return eval_formula(m.core_fam[x.core][y.fam], 0, y.idx);
  if (y.core >= 0) return eval_formula(m.fam_core[x.fam][y.core], x.idx, 0);
  return eval_formula(m.fam_fam[x.fam][y.fam], x.idx, y.idx);
}

std::string describe_point(const ChronoModel& m, const ModelPoint& p) {
  if (p.core >= 0) return m.core.label(p.core);
  return m.families[p.fam] + "(" + std::to_string(p.idx) + ")";
}

SymbolicSet past_of_core(const ChronoModel& m, int i) {
  SymbolicSet s = sym_make(m.n_fams());
  for (int j = 0; j < m.n_cores(); ++j)
    if (m.core_core[j][i]) s.core |= bit(j);
  for (size_t h = 0; h < m.n_fams(); ++h) s.fams[h] = compile_unary(m.fam_core[h][i], 0);
  return s;
}

SymbolicSet past_of_fam(const ChronoModel& m, int f, std::uint64_t k) {
  SymbolicSet s = sym_make(m.n_fams());
  for (int j = 0; j < m.n_cores(); ++j)
    if (eval_formula(m.core_fam[j][f], 0, k)) s.core |= bit(j);
  for (size_t h = 0; h < m.n_fams(); ++h)
    s.fams[h] = compile_unary(substitute(m.fam_fam[h][f], 1, k), 0);
  return s;
}

SymbolicSet past_of_point(const ChronoModel& m, const ModelPoint& p) {
  return p.core >= 0 ? past_of_core(m, p.core) : past_of_fam(m, p.fam, p.idx);
}

SymbolicSet past_of_set(const ChronoModel& m, const SymbolicSet& s) {
  SymbolicSet r = sym_make(m.n_fams());
  for (int i : indices_of(s.core)) r = sym_union(r, past_of_core(m, i));
  for (size_t g = 0; g < m.n_fams(); ++g) {
    const NatSet& j = s.fams[g];
    if (nat_empty(j)) continue;
    Formula jf = formula_from_natset(j, 1);
    for (int c = 0; c < m.n_cores(); ++c) {
      if (has(r.core, c)) continue;
      NatSet hits = nat_intersect(compile_unary(m.core_fam[c][g], 1), j);
      if (!nat_empty(hits)) r.core |= bit(c);
    }
    for (size_t h = 0; h < m.n_fams(); ++h) {
      NatSet part = elim_exists(Formula::conj({jf, m.fam_fam[h][g]}), 1);
      r.fams[h] = nat_union(r.fams[h], part);
    }
  }
  return r;
}

SymbolicSet points_before_all(const ChronoModel& m, const SymbolicSet& s) {
  SymbolicSet r = sym_make(m.n_fams());
  std::vector<Formula> fam_jf(m.n_fams());
  for (size_t g = 0; g < m.n_fams(); ++g) fam_jf[g] = formula_from_natset(s.fams[g], 1);
  for (int c = 0; c < m.n_cores(); ++c) {
    bool ok = true;
    for (int i : indices_of(s.core)) ok = ok && m.core_core[c][i] != 0;
    for (size_t g = 0; g < m.n_fams() && ok; ++g) {
      if (nat_empty(s.fams[g])) continue;
      ok = nat_subset(s.fams[g], compile_unary(m.core_fam[c][g], 1));
    }
    if (ok) r.core |= bit(c);
  }
  for (size_t h = 0; h < m.n_fams(); ++h) {
    NatSet idx = NatSet::all();
    for (int i : indices_of(s.core))
      idx = nat_intersect(idx, compile_unary(m.fam_core[h][i], 0));
    for (size_t g = 0; g < m.n_fams(); ++g) {
      if (nat_empty(s.fams[g])) continue;
      NatSet part =
          elim_forall(Formula::disj({Formula::neg(fam_jf[g]), m.fam_fam[h][g]}), 1);
      idx = nat_intersect(idx, part);
    }
    r.fams[h] = idx;
  }
  return r;
}

SymbolicSet common_past(const ChronoModel& m, const SymbolicSet& s) {
  return past_of_set(m, points_before_all(m, s));
}

NatSet fam_past_contains(const ChronoModel& m, int g, const SymbolicSet& s) {
  NatSet r = NatSet::all();
  for (int j : indices_of(s.core)) r = nat_intersect(r, compile_unary(m.core_fam[j][g], 1));
  for (size_t h = 0; h < m.n_fams(); ++h) {
    if (nat_empty(s.fams[h])) continue;
    Formula jf = formula_from_natset(s.fams[h], 0);
    NatSet part = elim_forall(Formula::disj({Formula::neg(jf), m.fam_fam[h][g]}), 0);
    r = nat_intersect(r, part);
  }
  return r;
}

NatSet fam_past_within(const ChronoModel& m, int g, const SymbolicSet& s) {
  NatSet escapes = NatSet::empty_set();
  for (int j = 0; j < m.n_cores(); ++j) {
    if (has(s.core, j)) continue;
    escapes = nat_union(escapes, compile_unary(m.core_fam[j][g], 1));
  }
  for (size_t h = 0; h < m.n_fams(); ++h) {
    Formula outside = formula_from_natset(nat_complement(s.fams[h]), 0);
    if (outside.kind == FKind::False) continue;
    NatSet part = elim_exists(Formula::conj({outside, m.fam_fam[h][g]}), 0);
    escapes = nat_union(escapes, part);
  }
  return nat_complement(escapes);
}

NatSet fam_past_equals(const ChronoModel& m, int g, const SymbolicSet& s) {
  return nat_intersect(fam_past_contains(m, g, s), fam_past_within(m, g, s));
}

// ---------------------------------------------------------------------------
// Validation

namespace {

// Bounded universe for the transitivity check: all cores plus every family
// instance below the cube bound of the joint scale.
struct BoundedUniverse {
  std::vector<ModelPoint> pts;
  std::vector<std::vector<std::uint64_t>> adj;  // adjacency bitset rows

  explicit BoundedUniverse(const ChronoModel& m) {
    std::uint64_t b = cube_bound(model_scale(m));
    for (int i = 0; i < m.n_cores(); ++i) pts.push_back(ModelPoint::core_pt(i));
    for (size_t f = 0; f < m.n_fams(); ++f)
      for (std::uint64_t v = 0; v < b; ++v)
        pts.push_back(ModelPoint::fam_pt(static_cast<int>(f), v));
    size_t n = pts.size(), words = (n + 63) / 64;
    adj.assign(n, std::vector<std::uint64_t>(words, 0));
    for (size_t x = 0; x < n; ++x)
      for (size_t y = 0; y < n; ++y)
        if (point_before(m, pts[x], pts[y])) adj[x][y / 64] |= std::uint64_t{1} << (y % 64);
  }

  bool edge(size_t x, size_t y) const {
    return (adj[x][y / 64] >> (y % 64)) & 1;
  }
};

void check_transitivity(const ChronoModel& m, std::vector<std::string>& out) {
  BoundedUniverse u(m);
  size_t n = u.pts.size(), words = n ? u.adj[0].size() : 0;
  for (size_t x = 0; x < n && out.size() < 8; ++x) {
    for (size_t y = 0; y < n && out.size() < 8; ++y) {
      if (!u.edge(x, y)) continue;
      for (size_t w = 0; w < words; ++w) {
        std::uint64_t missing = u.adj[y][w] & ~u.adj[x][w];
        if (!missing) continue;
        size_t z = w * 64 + static_cast<size_t>(std::countr_zero(missing));
        out.push_back("not transitive: " + describe_point(m, u.pts[x]) + " before " +
                      describe_point(m, u.pts[y]) + " before " + describe_point(m, u.pts[z]) +
                      " but not " + describe_point(m, u.pts[x]) + " before " +
                      describe_point(m, u.pts[z]));
        break;
      }
    }
  }
}

void check_irreflexivity(const ChronoModel& m, std::vector<std::string>& out) {
  for (int i = 0; i < m.n_cores(); ++i)
    if (m.core_core[i][i])
      out.push_back("core " + m.core.label(i) + " precedes itself");
  for (size_t f = 0; f < m.n_fams(); ++f) {
    NatSet diag = compile_unary(rename_var(m.fam_fam[f][f], 1, 0), 0);
    if (!nat_empty(diag)) {
      std::uint64_t w = nat_min(diag);
      out.push_back(m.families[f] + "(" + std::to_string(w) + ") precedes itself");
    }
  }
}

void check_distinguishing_pasts(const ChronoModel& m, const char* side,
                                std::vector<std::string>& out) {
  std::vector<SymbolicSet> core_pasts;
  for (int i = 0; i < m.n_cores(); ++i) core_pasts.push_back(past_of_core(m, i));
  for (int i = 0; i < m.n_cores(); ++i)
    for (int j = i + 1; j < m.n_cores(); ++j)
      if (core_pasts[i] == core_pasts[j])
        out.push_back(std::string(side) + "s of cores " + m.core.label(i) + " and " +
                      m.core.label(j) + " coincide");
  for (int i = 0; i < m.n_cores(); ++i)
    for (size_t g = 0; g < m.n_fams(); ++g) {
      NatSet agree = fam_past_equals(m, static_cast<int>(g), core_pasts[i]);
      if (!nat_empty(agree))
        out.push_back(std::string(side) + "s of core " + m.core.label(i) + " and " +
                      m.families[g] + "(" + std::to_string(nat_min(agree)) + ") coincide");
    }
  // Family against family: exact concrete comparison over the analysis window.
  std::uint64_t w = cube_bound(model_scale(m));
  std::vector<std::vector<SymbolicSet>> fam_pasts(m.n_fams());
  for (size_t g = 0; g < m.n_fams(); ++g)
    for (std::uint64_t k = 0; k < w; ++k)
      fam_pasts[g].push_back(past_of_fam(m, static_cast<int>(g), k));
  for (size_t g = 0; g < m.n_fams(); ++g)
    for (size_t h = g; h < m.n_fams(); ++h)
      for (std::uint64_t k1 = 0; k1 < w && out.size() < 16; ++k1)
        for (std::uint64_t k2 = (g == h ? k1 + 1 : 0); k2 < w; ++k2)
          if (fam_pasts[g][k1] == fam_pasts[h][k2]) {
            out.push_back(std::string(side) + "s of " + m.families[g] + "(" +
                          std::to_string(k1) + ") and " + m.families[h] + "(" +
                          std::to_string(k2) + ") coincide");
            break;
          }
}

void check_endpoints(const ChronoModel& m, const std::vector<ChronoModel::Endpoint>& eps,
                     const char* what, std::vector<std::string>& out) {
  for (const auto& ep : eps) {
    std::string tag = std::string(what) + " " + ep.name;
    if (sym_is_empty(ep.set)) {
      out.push_back(tag + ": set is empty");
      continue;
    }
    SymbolicSet closure = past_of_set(m, ep.set);
    if (!(closure == ep.set)) {
      out.push_back(tag + ": not a past set (the pasts of its members do not reproduce it)");
      continue;
    }
    // Must be terminal: no point of the model has exactly this past.
    for (int i = 0; i < m.n_cores(); ++i)
      if (past_of_core(m, i) == ep.set)
        out.push_back(tag + ": equals the past of core " + m.core.label(i));
    for (size_t g = 0; g < m.n_fams(); ++g) {
      NatSet agree = fam_past_equals(m, static_cast<int>(g), ep.set);
      if (!nat_empty(agree))
        out.push_back(tag + ": equals the past of " + m.families[g] + "(" +
                      std::to_string(nat_min(agree)) + ")");
    }
    // Generating chain: declared family, or any family with instances in the set.
    std::vector<int> gens;
    if (ep.gen_fam >= 0)
      gens.push_back(ep.gen_fam);
    else
      for (size_t g = 0; g < m.n_fams(); ++g)
        if (!nat_empty(ep.set.fams[g])) gens.push_back(static_cast<int>(g));
    bool generated = false;
    std::string last_reason = tag + ": no candidate generating chain";
    for (int g : gens) {
      NatSet j = nat_intersect(ep.gen_fam >= 0 ? ep.gen_indices : NatSet::all(), ep.set.fams[g]);
      if (nat_finite(j)) {
        last_reason = tag + ": generator indices inside the set are finite for " + m.families[g];
        continue;
      }
      Formula jf0 = formula_from_natset(j, 0);
      Formula jf1 = formula_from_natset(j, 1);
      Formula incomparable = Formula::conj(
          {jf0, jf1,
           Formula::disj({Formula::diff_ge(0, 1, 1), Formula::diff_ge(1, 0, 1)}),
           Formula::neg(Formula::disj({m.fam_fam[g][g], swap_vars(m.fam_fam[g][g])}))});
      if (!nat_empty(elim_exists(incomparable, 0))) {
        last_reason = tag + ": candidate generator " + m.families[g] + " is not a chain";
        continue;
      }
      SymbolicSet chain = sym_make(m.n_fams());
      chain.fams[g] = j;
      if (!(past_of_set(m, chain) == ep.set)) {
        last_reason =
            tag + ": chain " + m.families[g] + " does not generate the declared set";
        continue;
      }
      generated = true;
      break;
    }
    if (!generated) out.push_back(last_reason);
  }
}

}  // namespace

std::vector<std::string> ModelValidation::all_problems() const {
  std::vector<std::string> out;
  for (const auto* v : {&irreflexivity, &transitivity, &distinguishing, &endpoints, &sequences})
    out.insert(out.end(), v->begin(), v->end());
  return out;
}

ModelValidation validate_model(const ChronoModel& m) {
  check_structure(m);
  ModelValidation v;
  check_irreflexivity(m, v.irreflexivity);
  check_transitivity(m, v.transitivity);
  ChronoModel rev = transpose(m);
  check_distinguishing_pasts(m, "past", v.distinguishing);
  check_distinguishing_pasts(rev, "future", v.distinguishing);
  check_endpoints(m, m.tips, "terminal past", v.endpoints);
  check_endpoints(rev, rev.tips, "terminal future", v.endpoints);
  for (const auto& sq : m.sequences) {
    if (sq.fam >= 0) {
      if (sq.fam >= static_cast<int>(m.n_fams()))
        v.sequences.push_back("sequence " + sq.name + ": unknown family");
      else if (!nat_infinite(sq.indices))
        v.sequences.push_back("sequence " + sq.name + ": index set must be infinite");
    } else {
      if (sq.cycle.empty())
        v.sequences.push_back("sequence " + sq.name + ": empty cycle");
      for (const auto& p : sq.cycle) {
        bool ok = (p.core >= 0 && p.core < m.n_cores() && p.fam < 0) ||
                  (p.core < 0 && p.fam >= 0 && p.fam < static_cast<int>(m.n_fams()));
        if (!ok) v.sequences.push_back("sequence " + sq.name + ": bad point reference");
      }
    }
  }
  return v;
}

void require_valid_model(const ChronoModel& m) {
  ModelValidation v = validate_model(m);
  if (v.ok()) return;
  std::string msg = "invalid chronological model:";
  for (const auto& p : v.all_problems()) msg += "\n  " + p;
  throw PreconditionError(msg);
}

}  // namespace seqtop
