#include "seqtop/fixtures.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqtop/completion.hpp"
#include "seqtop/errors.hpp"
#include "seqtop/limit_op.hpp"
#include "seqtop/report.hpp"
#include "seqtop/topology.hpp"

namespace seqtop {
namespace {

const VarNames kMN{"m", "n"};

// Relation-table assembly for chronological models.  Convention throughout:
// X,Y:pred declares X(m) before Y(n) exactly when pred(m,n) holds.
struct ModelBuilder {
  ChronoModel m;

  ModelBuilder(std::vector<std::string> cores, std::vector<std::string> fams) {
    m.core = GroundSet(std::move(cores));
    m.families = std::move(fams);
    size_t nc = static_cast<size_t>(m.n_cores()), nf = m.n_fams();
    m.core_core.assign(nc, std::vector<std::uint8_t>(nc, 0));
    m.core_fam.assign(nc, std::vector<Formula>(nf, Formula::truth(false)));
    m.fam_core.assign(nf, std::vector<Formula>(nc, Formula::truth(false)));
    m.fam_fam.assign(nf, std::vector<Formula>(nf, Formula::truth(false)));
  }

  int F(const std::string& name) const { return m.fam_require(name); }
  int C(const std::string& name) const {
    int i = m.core.index_of(name);
    if (i < 0) throw PreconditionError("fixture builder: no core point named " + name);
    return i;
  }

  void cc(const std::string& a, const std::string& b) { m.core_core[C(a)][C(b)] = 1; }
  void cf(const std::string& a, const std::string& f, const std::string& pred) {
    m.core_fam[C(a)][F(f)] = parse_formula(pred, kMN);
  }
  void fc(const std::string& f, const std::string& b, const std::string& pred) {
    m.fam_core[F(f)][C(b)] = parse_formula(pred, kMN);
  }
  void ff(const std::string& f, const std::string& g, const std::string& pred) {
    m.fam_fam[F(f)][F(g)] = parse_formula(pred, kMN);
  }

  SymbolicSet whole(std::initializer_list<const char*> fams) const {
    SymbolicSet s = sym_make(m.n_fams());
    for (const char* nm : fams) s.fams[F(nm)] = NatSet::all();
    return s;
  }
  void tip(const std::string& name, std::initializer_list<const char*> fams, const std::string& gen) {
    m.tips.push_back({name, whole(fams), F(gen), NatSet::all()});
  }
  void tif(const std::string& name, std::initializer_list<const char*> fams, const std::string& gen) {
    m.tifs.push_back({name, whole(fams), F(gen), NatSet::all()});
  }
  void fam_seq(const std::string& name, const std::string& f) {
    ChronoModel::Sequence s;
    s.name = name;
    s.fam = F(f);
    m.sequences.push_back(std::move(s));
  }
};

// ---------------------------------------------------------------------------
// Topology / operator fixtures.

Fixture fx_sierpinski() {
  Fixture f;
  f.id = "sierpinski";
  f.kind = FixtureKind::Topology;
  f.note = "two points with one open singleton; the open point is designated";
  GroundSet g({"p", "q"});
  f.topology = generate_topology(g, {Mask{1}});
  f.designated = 1;
  f.manifest = {
      {"refined-opens", "{} {p} {q} {p,q}"},
      {"separation", "fin=pass sep=pass min=pass unique=pass"},
      {"operator-chain", "agree"},
      {"star-table", "{p}->{p}; {q}->{q}; {p,q}->{}"},
  };
  return f;
}

Fixture fx_crust() {
  Fixture f;
  f.id = "three-point-crust";
  f.kind = FixtureKind::Topology;
  f.note = "three-point chain topology; refining around the designated point "
           "must also pry the outer pair apart";
  GroundSet g({"p", "q", "r"});
  f.topology = generate_topology(g, {Mask{1}, Mask{3}});
  f.designated = 1;
  f.manifest = {
      {"refined-opens", "{} {p} {q} {p,q} {q,r} {p,q,r}"},
      {"separation", "fin=pass sep=pass min=pass unique=pass"},
      {"operator-chain", "agree"},
  };
  return f;
}

Fixture fx_cascade() {
  Fixture f;
  f.id = "cascade-order2";
  f.kind = FixtureKind::Operator;
  f.note = "three-point operator needing two applications to stabilize; its "
           "starred form is first order";
  GroundSet g({"a", "b", "c"});
  // masks: a=1 b=2 c=4
  std::vector<Mask> table(8, 0);
  table[1] = 3;  // {a} -> {a,b}
  table[2] = 6;  // {b} -> {b,c}
  table[4] = 6;  // {c} -> {b,c}
  table[3] = 2;
  table[5] = 2;
  table[6] = 6;
  table[7] = 2;
  f.op = make_operator(g, std::move(table));
  f.designated = 1;
  f.manifest = {
      {"order", "order 2"},
      {"star-order", "first order"},
      {"star-topology", "agree"},
  };
  return f;
}

Fixture fx_pruned() {
  Fixture f;
  f.id = "pruned";
  f.kind = FixtureKind::Operator;
  f.note = "two-point operator that kills the full set; no iterate ever "
           "matches the derived topology";
  GroundSet g({"a", "b"});
  std::vector<Mask> table(4, 0);
  table[1] = 3;
  table[2] = 3;
  table[3] = 0;
  f.op = make_operator(g, std::move(table));
  f.manifest = {
      {"order", "not of any order"},
  };
  return f;
}

// ---------------------------------------------------------------------------
// Chronological models.

const std::vector<ManifestCheck> kCornerClaims = {
    {"claim:empty-component-compatibility", "yes"},
    {"claim:cross-separation-base", "no"},
    {"claim:cross-separation-starred", "yes"},
    {"claim:terminal-chain-endpoint", "yes"},
    {"claim:boundary-closed", "yes"},
    {"claim:manifold-dense", "yes"},
    {"claim:manifold-subspace-double-starred", "no"},
};

const std::vector<ManifestCheck> kAllClaimsYes = {
    {"claim:chronology-sets-open", "yes"},
    {"claim:empty-component-compatibility", "yes"},
    {"claim:cross-separation-base", "yes"},
    {"claim:cross-separation-starred", "yes"},
    {"claim:terminal-chain-endpoint", "yes"},
    {"claim:boundary-closed", "yes"},
    {"claim:manifold-dense", "yes"},
    {"claim:manifold-subspace-base", "yes"},
    {"claim:manifold-subspace-starred", "yes"},
    {"claim:manifold-subspace-double-starred", "yes"},
    {"claim:t1-points", "yes"},
    {"claim:report-minimality", "yes"},
};

void append(std::vector<ManifestCheck>& dst, const std::vector<ManifestCheck>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

// Shared skeleton of the two-tip corner models: an envelope b, a bottom clock
// c whose graded prefixes keep every ladder's low rungs apart, witness
// ladders, a probe family s, and an exit stack u/f/t around core points p, v.
Fixture fx_corner_one() {
  ModelBuilder b({"p", "v"}, {"b", "c", "w", "q", "s", "u", "f", "t"});
  b.ff("b", "b", "m>n");
  b.ff("c", "c", "m<n");
  b.ff("w", "w", "m<n");
  b.ff("q", "q", "m<n");
  b.ff("u", "u", "m<n");
  b.ff("t", "t", "m<n");
  b.ff("f", "f", "m>n");

  b.fc("b", "p", "true");
  b.ff("b", "w", "n>=1|m>=2");
  b.ff("b", "q", "n>=1|m>=2");
  b.ff("b", "s", "n>=1|m>=4");
  b.ff("b", "u", "n>=1|m>=4");
  b.ff("b", "f", "true");
  b.ff("b", "t", "true");

  b.fc("c", "p", "true");
  b.fc("c", "v", "true");
  b.ff("c", "w", "m<n+1");
  b.ff("c", "q", "m<n+2");
  b.ff("c", "s", "true");
  b.ff("c", "u", "true");
  b.ff("c", "f", "true");
  b.ff("c", "t", "true");

  b.fc("w", "p", "true");
  b.ff("w", "q", "n>=m");
  b.ff("w", "s", "n>m");
  b.ff("w", "u", "n>m");
  b.ff("w", "f", "true");
  b.ff("w", "t", "true");

  b.cc("v", "p");
  b.cf("v", "s", "true");
  b.cf("v", "u", "true");
  b.cf("v", "f", "true");
  b.cf("v", "t", "true");

  b.ff("q", "s", "n>m");
  b.ff("q", "u", "n>m");
  b.ff("q", "f", "true");
  b.ff("q", "t", "true");

  b.ff("s", "u", "n>=m");
  b.ff("s", "f", "m>n");
  b.ff("s", "t", "true");

  b.cf("p", "t", "true");

  b.tip("P", {"b", "c", "w", "q"}, "q");
  b.tif("F", {"f"}, "f");
  b.fam_seq("sigma", "s");

  Fixture f;
  f.id = "example-A1";
  f.kind = FixtureKind::Chrono;
  f.note = "one boundary pair sharing its probe-sequence limit with an "
           "interior point; the starred limits drop the boundary";
  f.model = std::move(b.m);
  f.manifest = {
      {"boundary", "P|F"},
      {"s-related:P|F", "yes"},
      {"limits:sigma", "{pt:p, bd:P|F}"},
      {"star:sigma", "{pt:p}"},
      {"limits:chain:P", "{bd:P|F}"},
      {"limits:chain:F", "{bd:P|F}"},
  };
  append(f.manifest, kCornerClaims);
  return f;
}

ChronoModel corner_two_model() {
  ModelBuilder b({"p", "v"}, {"b", "c", "w", "a", "h", "s", "u", "f", "t"});
  b.ff("b", "b", "m>n");
  b.ff("c", "c", "m<n");
  b.ff("w", "w", "m<n");
  b.ff("a", "a", "m<n");
  b.ff("h", "h", "m<n");
  b.ff("u", "u", "m<n");
  b.ff("t", "t", "m<n");
  b.ff("f", "f", "m>n");

  b.fc("b", "p", "true");
  b.ff("b", "w", "n>=1|m>=2");
  b.ff("b", "a", "n>=1|m>=3");
  b.ff("b", "h", "n>=1|m>=7");
  b.ff("b", "s", "n>=1|m>=4");
  b.ff("b", "u", "n>=1|m>=4");
  b.ff("b", "f", "true");
  b.ff("b", "t", "true");

  b.fc("c", "p", "true");
  b.fc("c", "v", "true");
  b.ff("c", "w", "m<n+1");
  b.ff("c", "a", "m<n+2");
  b.ff("c", "h", "m<n+1");
  b.ff("c", "s", "true");
  b.ff("c", "u", "true");
  b.ff("c", "f", "true");
  b.ff("c", "t", "true");

  b.fc("w", "p", "true");
  b.ff("w", "s", "n>m");
  b.ff("w", "u", "n>m");
  b.ff("w", "f", "true");
  b.ff("w", "t", "true");

  b.cc("v", "p");
  b.cf("v", "s", "true");
  b.cf("v", "u", "true");
  b.cf("v", "f", "true");
  b.cf("v", "t", "true");

  b.ff("a", "s", "n>m");
  b.ff("a", "h", "n>m");
  b.ff("a", "u", "n>m");
  b.ff("a", "f", "true");
  b.ff("a", "t", "true");

  b.ff("h", "f", "true");

  b.ff("s", "u", "n>=m");
  b.ff("s", "f", "m>n");
  b.ff("s", "t", "true");

  b.cf("p", "t", "true");

  b.tip("P", {"b", "c", "a", "h"}, "h");
  b.tip("P'", {"b", "c", "a"}, "a");
  b.tif("F", {"f"}, "f");
  b.fam_seq("sigma", "s");
  return std::move(b.m);
}

Fixture fx_corner_two() {
  Fixture f;
  f.id = "example-A2";
  f.kind = FixtureKind::Chrono;
  f.note = "nested terminal pasts; the probe sequence converges to the "
           "smaller, future-free pair while the larger one pairs off";
  f.model = corner_two_model();
  f.manifest = {
      {"boundary", "P|F, P'|-"},
      {"s-related:P|F", "yes"},
      {"limits:sigma", "{pt:p, bd:P'|-}"},
      {"star:sigma", "{pt:p}"},
      {"limits:chain:P", "{bd:P|F}"},
      {"limits:chain:P'", "{bd:P'|-}"},
      {"limits:chain:F", "{bd:P|F}"},
  };
  append(f.manifest, kCornerClaims);
  return f;
}

Fixture fx_corner_two_variant() {
  Fixture f;
  f.id = "example-A4";
  f.kind = FixtureKind::Chrono;
  f.note = "same model as example-A2, exercised through the boundary-first "
           "modification: the mixed limit set drops its interior point";
  f.model = corner_two_model();
  f.manifest = {
      {"boundary", "P|F, P'|-"},
      {"limits:sigma", "{pt:p, bd:P'|-}"},
      {"double-star:sigma", "{bd:P'|-} dropped-interior=yes"},
  };
  append(f.manifest, kCornerClaims);
  return f;
}

Fixture fx_tower(const std::map<std::string, std::string>& params) {
  auto it = params.find("k");
  std::string k = it == params.end() ? "2" : it->second;
  if (k != "2")
    throw PreconditionError("example-A3 is pinned at k=2; parameter k=" + k +
                            " has no frozen expectations");

  ModelBuilder b({}, {"b", "c", "e", "E", "d", "y", "x", "u", "f", "t", "T", "G"});
  b.ff("b", "b", "m>n");
  b.ff("c", "c", "m<n");
  b.ff("e", "e", "m<n");
  b.ff("E", "E", "m<n");
  b.ff("u", "u", "m<n");
  b.ff("T", "T", "m<n");
  b.ff("G", "G", "m<n");
  b.ff("f", "f", "m>n");

  b.ff("b", "e", "n>=1|m>=3");
  b.ff("b", "E", "n>=1|m>=4");
  b.ff("b", "d", "n>=1|m>=3");
  b.ff("b", "y", "true");
  b.ff("b", "x", "n>=1|m>=5");
  b.ff("b", "u", "n>=1|m>=5");
  b.ff("b", "f", "true");
  b.ff("b", "t", "true");
  b.ff("b", "T", "true");
  b.ff("b", "G", "true");

  b.ff("c", "e", "m<n+1");
  b.ff("c", "E", "m<n+2");
  b.ff("c", "d", "m<n+1");
  b.ff("c", "y", "true");
  b.ff("c", "x", "m<n+1");
  b.ff("c", "u", "m<n+1");
  b.ff("c", "f", "true");
  b.ff("c", "t", "true");
  b.ff("c", "T", "true");
  b.ff("c", "G", "true");

  b.ff("e", "E", "n>m");
  b.ff("e", "d", "n>=m");
  b.ff("e", "y", "true");
  b.ff("e", "x", "n>m");
  b.ff("e", "u", "n>m");
  b.ff("e", "f", "true");
  b.ff("e", "t", "true");
  b.ff("e", "T", "true");
  b.ff("e", "G", "true");

  b.ff("E", "x", "n>m");
  b.ff("E", "u", "n>m");
  b.ff("E", "f", "true");
  b.ff("E", "t", "true");
  b.ff("E", "T", "true");
  b.ff("E", "G", "true");

  b.ff("d", "y", "m==n");
  b.ff("d", "x", "n>m");
  b.ff("d", "u", "n>m");
  b.ff("d", "f", "true");
  b.ff("d", "t", "true");
  b.ff("d", "T", "true");
  b.ff("d", "G", "true");

  b.ff("y", "f", "m>n");
  b.ff("y", "t", "m!=n");
  b.ff("y", "T", "n>=2|(n>=1&m>=1)");
  b.ff("y", "G", "n>=2|(n>=1&m>=1)");

  b.ff("x", "u", "n>=m");
  b.ff("x", "f", "m>n");
  b.ff("x", "t", "true");
  b.ff("x", "T", "true");
  b.ff("x", "G", "true");

  b.ff("u", "T", "true");
  b.ff("u", "G", "true");

  b.ff("t", "T", "n>m");
  b.ff("t", "G", "n>m");

  b.ff("T", "G", "n>=m");

  b.tip("Pinf", {"b", "c", "e", "E"}, "E");
  b.tip("P'inf", {"b", "c", "e"}, "e");
  b.tif("F", {"f"}, "f");
  b.fam_seq("sigma_x", "x");
  b.fam_seq("sigma_y", "y");

  Fixture f;
  f.id = "example-A3";
  f.kind = FixtureKind::Chrono;
  f.note = "purely parametric model whose second sequence has per-index "
           "private pasts; one boundary pair only appears at the second "
           "limit stage";
  f.model = std::move(b.m);
  f.manifest = {
      {"boundary", "Pinf|F, P'inf|-"},
      {"s-related:Pinf|F", "yes"},
      {"limits:sigma_x", "{pt:y{0+1k}, bd:Pinf|F}"},
      {"limits:sigma_y", "{bd:P'inf|-}"},
      {"star:sigma_x", "{pt:y{0+1k}}"},
      {"star:sigma_y", "{bd:P'inf|-}"},
      {"iterate:sigma_x", "stable_at=2 final={pt:y{0+1k}, bd:Pinf|F, bd:P'inf|-}"},
      {"limits:chain:Pinf", "{bd:Pinf|F}"},
      {"limits:chain:P'inf", "{bd:P'inf|-}"},
      {"limits:chain:F", "{bd:Pinf|F}"},
  };
  append(f.manifest, kCornerClaims);
  return f;
}

Fixture fx_removed_point() {
  ModelBuilder b({}, {"c", "d"});
  b.ff("c", "c", "m<n");
  b.ff("d", "d", "m>n");
  b.ff("c", "d", "true");
  b.tip("P", {"c"}, "c");
  b.tif("F", {"d"}, "d");

  Fixture f;
  f.id = "removed-point";
  f.kind = FixtureKind::Chrono;
  f.note = "ascending chain meeting a descending one; the completion restores "
           "exactly one point between them";
  f.model = std::move(b.m);
  f.manifest = {
      {"boundary", "P|F"},
      {"s-related:P|F", "yes"},
      {"limits:chain:P", "{bd:P|F}"},
      {"limits:chain:F", "{bd:P|F}"},
  };
  append(f.manifest, kAllClaimsYes);
  return f;
}

Fixture fx_ray() {
  ModelBuilder b({}, {"r"});
  b.ff("r", "r", "m<n");
  b.tip("P", {"r"}, "r");
  b.fam_seq("sigma", "r");

  Fixture f;
  f.id = "minkowski-ray";
  f.kind = FixtureKind::Chrono;
  f.note = "single ascending chain; its terminal past pairs with nothing and "
           "the completion adds one future-free point";
  f.model = std::move(b.m);
  f.manifest = {
      {"boundary", "P|-"},
      {"limits:sigma", "{bd:P|-}"},
      {"star:sigma", "{bd:P|-}"},
      {"limits:chain:P", "{bd:P|-}"},
  };
  append(f.manifest, kAllClaimsYes);
  return f;
}

Fixture fx_glw() {
  Fixture f;
  f.id = "glw-placeholder";
  f.kind = FixtureKind::Doc;
  f.note = "reserved id for a continuum spliced-interval example with no "
           "finite presentation; carries no data";
  f.manifest = {{"doc", "placeholder"}};
  return f;
}

// ---------------------------------------------------------------------------
// Check evaluation.

std::string pf(bool b) { return b ? "pass" : "fail"; }

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "undecided";
  }
}

std::string opens_string(const FinTopology& t) {
  std::string out;
  for (Mask o : t.opens) {
    if (!out.empty()) out += ' ';
    out += t.ground.format(o);
  }
  return out;
}

std::string table_string(const TailLimitOperator& op) {
  std::string out;
  Mask full = (Mask{1} << op.ground.size()) - 1;
  for (Mask b = 1; b <= full; ++b) {
    if (!out.empty()) out += "; ";
    out += op.ground.format(b) + "->" + op.ground.format(op.table[b]);
  }
  return out;
}

bool starts_with(const std::string& s, const std::string& pre, std::string& rest) {
  if (s.rfind(pre, 0) != 0) return false;
  rest = s.substr(pre.size());
  return true;
}

std::string topo_check(const Fixture& f, const std::string& name) {
  const FinTopology& t = *f.topology;
  if (name == "refined-opens") return opens_string(separating_refinement(t, f.designated));
  if (name == "separation") {
    SeparationReport r = verify_minimality(t, separating_refinement(t, f.designated),
                                           f.designated, 5);
    return "fin=" + pf(r.a_fin) + " sep=" + pf(r.a_sep) + " min=" + pf(r.a_min) +
           " unique=" + pf(r.unique_minimum);
  }
  if (name == "operator-chain") {
    FinTopology lhs = derived_topology(star_operator(associated_operator(t), f.designated));
    return lhs == separating_refinement(t, f.designated) ? "agree" : "differ";
  }
  if (name == "star-table")
    return table_string(star_operator(associated_operator(t), f.designated));
  throw PreconditionError("fixture " + f.id + ": unknown check " + name);
}

std::string op_check(const Fixture& f, const std::string& name) {
  const TailLimitOperator& op = *f.op;
  if (name == "order") return order_of(op).describe();
  if (name == "star-order") return order_of(star_operator(op, f.designated)).describe();
  if (name == "star-topology") {
    FinTopology lhs = derived_topology(star_operator(op, f.designated));
    return lhs == separating_refinement(derived_topology(op), f.designated) ? "agree" : "differ";
  }
  throw PreconditionError("fixture " + f.id + ": unknown check " + name);
}

// Completion plus lazily built admissibility report, shared across the checks
// of one verification run.
struct ChronoCtx {
  const Fixture& f;
  std::optional<Completion> comp;
  std::optional<AdmissibilityReport> rep;

  explicit ChronoCtx(const Fixture& fx) : f(fx) {}

  const Completion& completion() {
    if (!comp) {
      require_valid_model(*f.model);
      comp = build_completion(*f.model);
    }
    return *comp;
  }

  const AdmissibilityReport& report() {
    if (!rep) {
      const Completion& c = completion();
      std::vector<NamedSequence> catalog;
      for (const auto& s : c.model.sequences)
        catalog.push_back({s.name, resolve_sequence(c, s)});
      rep = admissibility_report(c, catalog);
    }
    return *rep;
  }
};

PairSequence fixture_seq(const Completion& c, const std::string& name) {
  for (const auto& s : c.model.sequences)
    if (s.name == name) return resolve_sequence(c, s);
  std::string rest;
  if (starts_with(name, "chain:", rest)) {
    auto chain = [&](const std::vector<ChronoModel::Endpoint>& eps) -> std::optional<PairSequence> {
      for (const auto& e : eps)
        if (e.name == rest && e.gen_fam >= 0) {
          PairSequence s;
          s.fam = e.gen_fam;
          s.indices = e.gen_indices;
          return s;
        }
      return std::nullopt;
    };
    if (auto s = chain(c.model.tips)) return *s;
    if (auto s = chain(c.model.tifs)) return *s;
  }
  throw PreconditionError("fixture has no sequence named " + name);
}

std::string chrono_check(ChronoCtx& ctx, const std::string& name) {
  const Completion& c = ctx.completion();
  std::string rest;
  if (name == "boundary") {
    std::string out;
    for (const auto& bp : c.boundary) {
      if (!out.empty()) out += ", ";
      out += bp.name;
    }
    return out.empty() ? "none" : out;
  }
  if (starts_with(name, "s-related:", rest)) {
    for (const auto& bp : c.boundary)
      if (bp.name == rest) return s_related(c, bp.past, bp.future) ? "yes" : "no";
    throw PreconditionError("fixture " + ctx.f.id + ": no boundary pair named " + rest);
  }
  if (starts_with(name, "limits:", rest))
    return describe_limit_set(c, chron_limit(c, fixture_seq(c, rest)));
  if (starts_with(name, "star:", rest))
    return describe_limit_set(c, chron_star(c, fixture_seq(c, rest)).starred);
  if (starts_with(name, "double-star:", rest)) {
    StarResult r = chron_double_star(c, fixture_seq(c, rest));
    return describe_limit_set(c, r.starred) +
           " dropped-interior=" + (r.manifold_branch ? "yes" : "no");
  }
  if (starts_with(name, "iterate:", rest)) {
    IterateResult r = chron_iterate(c, fixture_seq(c, rest));
    return "stable_at=" + std::to_string(r.stable_at) +
           " final=" + describe_limit_set(c, r.stages.back());
  }
  if (starts_with(name, "claim:", rest)) return verdict_str(ctx.report().verdict_of(rest));
  throw PreconditionError("fixture " + ctx.f.id + ": unknown check " + name);
}

std::string eval_check(const Fixture& f, ChronoCtx* ctx, const std::string& name) {
  switch (f.kind) {
    case FixtureKind::Topology: return topo_check(f, name);
    case FixtureKind::Operator: return op_check(f, name);
    case FixtureKind::Chrono: return chrono_check(*ctx, name);
    case FixtureKind::Doc:
      if (name == "doc") return "placeholder";
      throw PreconditionError("fixture " + f.id + ": unknown check " + name);
  }
  throw PreconditionError("fixture " + f.id + ": unknown kind");
}

}  // namespace

std::vector<std::string> fixture_ids() {
  return {"sierpinski",    "three-point-crust", "cascade-order2", "pruned",
          "removed-point", "minkowski-ray",     "example-A1",     "example-A2",
          "example-A3",    "example-A4",        "glw-placeholder"};
}

Fixture make_fixture(const std::string& id, const std::map<std::string, std::string>& params) {
  if (id != "example-A3" && !params.empty())
    throw PreconditionError("fixture " + id + " takes no parameters");
  if (id == "sierpinski") return fx_sierpinski();
  if (id == "three-point-crust") return fx_crust();
  if (id == "cascade-order2") return fx_cascade();
  if (id == "pruned") return fx_pruned();
  if (id == "removed-point") return fx_removed_point();
  if (id == "minkowski-ray") return fx_ray();
  if (id == "example-A1") return fx_corner_one();
  if (id == "example-A2") return fx_corner_two();
  if (id == "example-A3") return fx_tower(params);
  if (id == "example-A4") return fx_corner_two_variant();
  if (id == "glw-placeholder") return fx_glw();
  throw PreconditionError("unknown fixture id " + id);
}

std::string run_check(const Fixture& f, const std::string& check) {
  if (f.kind == FixtureKind::Chrono) {
    ChronoCtx ctx(f);
    return eval_check(f, &ctx, check);
  }
  return eval_check(f, nullptr, check);
}

std::vector<std::string> verify_fixture(const Fixture& f) {
  std::vector<std::string> lines;
  std::optional<ChronoCtx> ctx;
  if (f.kind == FixtureKind::Chrono) ctx.emplace(f);
  for (const auto& check : f.manifest) {
    std::string actual = eval_check(f, ctx ? &*ctx : nullptr, check.name);
    if (actual != check.expect)
      throw PreconditionError("fixture " + f.id + ": check '" + check.name + "' produced '" +
                              actual + "' but the manifest pins '" + check.expect + "'");
    lines.push_back(check.name + " = " + actual);
  }
  return lines;
}

}  // namespace seqtop
