#include "seqtop/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "seqtop/errors.hpp"

namespace seqtop {
namespace {

const VarNames kMN{"m", "n"};
const VarNames kN{"n"};

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing key '") + key + "'");
  return *it;
}

std::string need_string(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> name_list(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of names");
  std::vector<std::string> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(need_string(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Mask mask_from(const GroundSet& g, const Json& j, const std::string& where) {
  Mask m = 0;
  for (const auto& nm : name_list(j, where)) {
    int i = g.index_of(nm);
    if (i < 0) bad(where, "unknown point '" + nm + "'");
    m |= bit(i);
  }
  return m;
}

Json mask_json(const GroundSet& g, Mask m) { return Json(g.names(m)); }

std::string set_key(const GroundSet& g, Mask m) {
  std::string out;
  for (const auto& nm : g.names(m)) {
    if (!out.empty()) out += ',';
    out += nm;
  }
  return out;
}

Mask key_mask(const GroundSet& g, const std::string& key, const std::string& where) {
  Mask m = 0;
  std::stringstream ss(key);
  std::string nm;
  while (std::getline(ss, nm, ',')) {
    if (nm.empty()) continue;
    int i = g.index_of(nm);
    if (i < 0) bad(where, "unknown point '" + nm + "'");
    m |= bit(i);
  }
  return m;
}

Formula parse_pred(const Json& j, const VarNames& vars, const std::string& where) {
  std::string src = need_string(j, where);
  try {
    return parse_formula(src, vars);
  } catch (const SchemaError& e) {
    bad(where, e.what());
  } catch (const PreconditionError& e) {
    bad(where, e.what());
  }
}

NatSet parse_index_set(const Json& j, const std::string& where) {
  Formula f = parse_pred(j, kN, where);
  return compile_unary(f, 0);
}

std::string index_set_string(const NatSet& s) {
  return formula_to_string(formula_from_natset(s, 0), kN);
}

}  // namespace

InputKind detect_input(const Json& j) {
  if (!j.is_object()) bad("$", "expected a top-level object");
  if (j.contains("families") || j.contains("rel")) return InputKind::Model;
  if (j.contains("table")) return InputKind::Operator;
  if (j.contains("opens")) return InputKind::Topology;
  bad("$", "cannot tell what this file describes (no families/rel, table or opens key)");
}

// ---------------------------------------------------------------------------

Json topology_to_json(const FinTopology& t, Mask designated) {
  Json j;
  j["points"] = t.ground.labels();
  Json opens = Json::array();
  for (Mask o : t.opens) opens.push_back(mask_json(t.ground, o));
  j["opens"] = std::move(opens);
  if (designated) j["D"] = mask_json(t.ground, designated);
  return j;
}

FinTopology topology_from_json(const Json& j, Mask* designated) {
  GroundSet g(name_list(need(j, "points", "$"), "$.points"));
  const Json& jo = need(j, "opens", "$");
  if (!jo.is_array()) bad("$.opens", "expected an array of point lists");
  std::vector<Mask> opens;
  for (size_t i = 0; i < jo.size(); ++i)
    opens.push_back(mask_from(g, jo[i], "$.opens[" + std::to_string(i) + "]"));
  if (designated)
    *designated = j.contains("D") ? mask_from(g, j["D"], "$.D") : Mask{0};
  return make_topology(std::move(g), std::move(opens));
}

// ---------------------------------------------------------------------------

Json operator_to_json(const TailLimitOperator& op, Mask designated) {
  Json j;
  j["points"] = op.ground.labels();
  Json table = Json::object();
  Mask full = op.ground.full();
  for (Mask b = 1; b <= full; ++b) table[set_key(op.ground, b)] = set_key(op.ground, op.table[b]);
  j["table"] = std::move(table);
  j["coherent"] = true;
  if (designated) j["D"] = mask_json(op.ground, designated);
  return j;
}

TailLimitOperator operator_from_json(const Json& j, Mask* designated) {
  GroundSet g(name_list(need(j, "points", "$"), "$.points"));
  const Json& jt = need(j, "table", "$");
  if (!jt.is_object()) bad("$.table", "expected an object of set -> set entries");
  size_t n = static_cast<size_t>(g.size());
  std::vector<Mask> table(size_t{1} << n, 0);
  std::vector<char> given(size_t{1} << n, 0);
  for (auto it = jt.begin(); it != jt.end(); ++it) {
    const std::string where = "$.table['" + it.key() + "']";
    Mask b = key_mask(g, it.key(), where);
    if (!b) bad(where, "profile sets must be nonempty");
    table[b] = key_mask(g, need_string(it.value(), where), where);
    given[b] = 1;
  }
  bool autofill = j.contains("autofill");
  if (autofill && j["autofill"] != Json("antitone-max"))
    bad("$.autofill", "the only supported fill policy is 'antitone-max'");
  for (Mask b = 1; b <= g.full(); ++b) {
    if (given[b]) continue;
    if (!autofill) bad("$.table", "missing entry for " + g.format(b));
    Mask acc = g.full();
    for (int i : indices_of(b)) {
      if (!given[bit(i)]) bad("$.table", "autofill needs every singleton entry");
      acc &= table[bit(i)];
    }
    table[b] = acc;
  }
  if (designated)
    *designated = j.contains("D") ? mask_from(g, j["D"], "$.D") : Mask{0};
  return make_operator(std::move(g), std::move(table));
}

// ---------------------------------------------------------------------------

Json symbolic_to_json(const ChronoModel& m, const SymbolicSet& s) {
  Json j;
  j["core"] = m.core.names(s.core);
  Json fams = Json::object();
  for (size_t f = 0; f < m.n_fams(); ++f)
    if (!nat_empty(s.fams[f])) fams[m.families[f]] = index_set_string(s.fams[f]);
  j["fams"] = std::move(fams);
  return j;
}

namespace {

SymbolicSet symbolic_from_json(const ChronoModel& m, const Json& j, const std::string& where) {
  SymbolicSet s = sym_make(m.n_fams());
  if (j.contains("core")) s.core = mask_from(m.core, j["core"], where + ".core");
  if (j.contains("fams")) {
    const Json& jf = j["fams"];
    if (!jf.is_object()) bad(where + ".fams", "expected an object of family -> predicate");
    for (auto it = jf.begin(); it != jf.end(); ++it) {
      int f = m.fam_index(it.key());
      if (f < 0) bad(where + ".fams", "unknown family '" + it.key() + "'");
      s.fams[f] = parse_index_set(it.value(), where + ".fams['" + it.key() + "']");
    }
  }
  return s;
}

void read_endpoints(ChronoModel& m, const Json& j, const char* key,
                    std::vector<ChronoModel::Endpoint>& out) {
  if (!j.contains(key)) return;
  const Json& je = j[key];
  std::string base = std::string("$.") + key;
  if (!je.is_array()) bad(base, "expected an array");
  for (size_t i = 0; i < je.size(); ++i) {
    std::string where = base + "[" + std::to_string(i) + "]";
    ChronoModel::Endpoint e;
    e.name = je[i].contains("name") ? need_string(je[i]["name"], where + ".name")
                                    : std::string(key) + std::to_string(i);
    e.set = symbolic_from_json(m, je[i], where);
    if (je[i].contains("chain")) {
      std::string fam = need_string(je[i]["chain"], where + ".chain");
      e.gen_fam = m.fam_index(fam);
      if (e.gen_fam < 0) bad(where + ".chain", "unknown family '" + fam + "'");
      if (je[i].contains("chain_indices"))
        e.gen_indices = parse_index_set(je[i]["chain_indices"], where + ".chain_indices");
    }
    out.push_back(std::move(e));
  }
}

ModelPoint point_from_json(const ChronoModel& m, const Json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected a point object");
  if (j.contains("core")) {
    int i = m.core.index_of(need_string(j["core"], where + ".core"));
    if (i < 0) bad(where + ".core", "unknown core point");
    return ModelPoint::core_pt(i);
  }
  if (j.contains("fam")) {
    int f = m.fam_index(need_string(j["fam"], where + ".fam"));
    if (f < 0) bad(where + ".fam", "unknown family");
    if (!j.contains("idx") || !j["idx"].is_number_unsigned())
      bad(where, "family points need an unsigned 'idx'");
    return ModelPoint::fam_pt(f, j["idx"].get<std::uint64_t>());
  }
  bad(where, "a point is {\"core\":name} or {\"fam\":name,\"idx\":k}");
}

}  // namespace

ChronoModel model_from_json(const Json& j) {
  ChronoModel m;
  m.core = GroundSet(j.contains("core") ? name_list(j["core"], "$.core")
                                        : std::vector<std::string>{});
  if (j.contains("families")) {
    const Json& jf = j["families"];
    if (!jf.is_array()) bad("$.families", "expected an array");
    for (size_t i = 0; i < jf.size(); ++i)
      m.families.push_back(
          need_string(need(jf[i], "name", "$.families[" + std::to_string(i) + "]"),
                      "$.families[" + std::to_string(i) + "].name"));
  }
  size_t nc = static_cast<size_t>(m.n_cores()), nf = m.n_fams();
  m.core_core.assign(nc, std::vector<std::uint8_t>(nc, 0));
  m.core_fam.assign(nc, std::vector<Formula>(nf, Formula::truth(false)));
  m.fam_core.assign(nf, std::vector<Formula>(nc, Formula::truth(false)));
  m.fam_fam.assign(nf, std::vector<Formula>(nf, Formula::truth(false)));

  if (j.contains("rel")) {
    const Json& jr = j["rel"];
    if (!jr.is_object()) bad("$.rel", "expected an object");
    if (jr.contains("core")) {
      const Json& jc = jr["core"];
      if (!jc.is_array()) bad("$.rel.core", "expected an array of [lhs, rhs] pairs");
      for (size_t i = 0; i < jc.size(); ++i) {
        std::string where = "$.rel.core[" + std::to_string(i) + "]";
        if (!jc[i].is_array() || jc[i].size() != 2) bad(where, "expected a [lhs, rhs] pair");
        int a = m.core.index_of(need_string(jc[i][0], where));
        int b = m.core.index_of(need_string(jc[i][1], where));
        if (a < 0 || b < 0) bad(where, "unknown core point");
        m.core_core[a][b] = 1;
      }
    }
    auto rel_group = [&](const char* key, auto&& fill) {
      if (!jr.contains(key)) return;
      const Json& jg = jr[key];
      std::string base = "$.rel." + std::string(key);
      if (!jg.is_array()) bad(base, "expected an array");
      for (size_t i = 0; i < jg.size(); ++i) fill(jg[i], base + "[" + std::to_string(i) + "]");
    };
    rel_group("core_family", [&](const Json& e, const std::string& where) {
      int a = m.core.index_of(need_string(need(e, "lhs", where), where + ".lhs"));
      int f = m.fam_index(need_string(need(e, "fam", where), where + ".fam"));
      if (a < 0) bad(where + ".lhs", "unknown core point");
      if (f < 0) bad(where + ".fam", "unknown family");
      m.core_fam[a][f] = parse_pred(need(e, "pred", where), kMN, where + ".pred");
    });
    rel_group("family_core", [&](const Json& e, const std::string& where) {
      int f = m.fam_index(need_string(need(e, "fam", where), where + ".fam"));
      int b = m.core.index_of(need_string(need(e, "rhs", where), where + ".rhs"));
      if (f < 0) bad(where + ".fam", "unknown family");
      if (b < 0) bad(where + ".rhs", "unknown core point");
      m.fam_core[f][b] = parse_pred(need(e, "pred", where), kMN, where + ".pred");
    });
    rel_group("family_family", [&](const Json& e, const std::string& where) {
      int f = m.fam_index(need_string(need(e, "f", where), where + ".f"));
      int g = m.fam_index(need_string(need(e, "g", where), where + ".g"));
      if (f < 0 || g < 0) bad(where, "unknown family");
      m.fam_fam[f][g] = parse_pred(need(e, "pred", where), kMN, where + ".pred");
    });
  }

  read_endpoints(m, j, "tips", m.tips);
  read_endpoints(m, j, "tifs", m.tifs);

  if (j.contains("sequences")) {
    const Json& js = j["sequences"];
    if (!js.is_array()) bad("$.sequences", "expected an array");
    for (size_t i = 0; i < js.size(); ++i) {
      std::string where = "$.sequences[" + std::to_string(i) + "]";
      ChronoModel::Sequence s;
      s.name = js[i].contains("name") ? need_string(js[i]["name"], where + ".name")
                                      : "seq" + std::to_string(i);
      if (js[i].contains("fam")) {
        std::string fam = need_string(js[i]["fam"], where + ".fam");
        s.fam = m.fam_index(fam);
        if (s.fam < 0) bad(where + ".fam", "unknown family '" + fam + "'");
        if (js[i].contains("indices"))
          s.indices = parse_index_set(js[i]["indices"], where + ".indices");
      } else if (js[i].contains("cycle")) {
        const Json& jc = js[i]["cycle"];
        if (!jc.is_array() || jc.empty()) bad(where + ".cycle", "expected a nonempty array");
        for (size_t k = 0; k < jc.size(); ++k)
          s.cycle.push_back(
              point_from_json(m, jc[k], where + ".cycle[" + std::to_string(k) + "]"));
      } else {
        bad(where, "a sequence is {\"fam\":...} or {\"cycle\":[...]}");
      }
      m.sequences.push_back(std::move(s));
    }
  }
  return m;
}

Json model_to_json(const ChronoModel& m) {
  Json j;
  j["core"] = m.core.labels();
  Json fams = Json::array();
  for (const auto& f : m.families) fams.push_back(Json{{"name", f}});
  j["families"] = std::move(fams);

  Json rel;
  Json cc = Json::array();
  for (int a = 0; a < m.n_cores(); ++a)
    for (int b = 0; b < m.n_cores(); ++b)
      if (m.core_core[a][b]) cc.push_back(Json::array({m.core.label(a), m.core.label(b)}));
  rel["core"] = std::move(cc);
  auto not_false = [](const Formula& f) { return f.kind != FKind::False; };
  Json cf = Json::array();
  for (int a = 0; a < m.n_cores(); ++a)
    for (size_t f = 0; f < m.n_fams(); ++f)
      if (not_false(m.core_fam[a][f]))
        cf.push_back(Json{{"lhs", m.core.label(a)},
                          {"fam", m.families[f]},
                          {"pred", formula_to_string(m.core_fam[a][f], kMN)}});
  rel["core_family"] = std::move(cf);
  Json fc = Json::array();
  for (size_t f = 0; f < m.n_fams(); ++f)
    for (int b = 0; b < m.n_cores(); ++b)
      if (not_false(m.fam_core[f][b]))
        fc.push_back(Json{{"fam", m.families[f]},
                          {"rhs", m.core.label(b)},
                          {"pred", formula_to_string(m.fam_core[f][b], kMN)}});
  rel["family_core"] = std::move(fc);
  Json ff = Json::array();
  for (size_t f = 0; f < m.n_fams(); ++f)
    for (size_t g = 0; g < m.n_fams(); ++g)
      if (not_false(m.fam_fam[f][g]))
        ff.push_back(Json{{"f", m.families[f]},
                          {"g", m.families[g]},
                          {"pred", formula_to_string(m.fam_fam[f][g], kMN)}});
  rel["family_family"] = std::move(ff);
  j["rel"] = std::move(rel);

  auto endpoints_json = [&](const std::vector<ChronoModel::Endpoint>& eps) {
    Json out = Json::array();
    for (const auto& e : eps) {
      Json je = symbolic_to_json(m, e.set);
      je["name"] = e.name;
      if (e.gen_fam >= 0) {
        je["chain"] = m.families[e.gen_fam];
        if (!(e.gen_indices == NatSet::all()))
          je["chain_indices"] = index_set_string(e.gen_indices);
      }
      out.push_back(std::move(je));
    }
    return out;
  };
  j["tips"] = endpoints_json(m.tips);
  j["tifs"] = endpoints_json(m.tifs);

  Json seqs = Json::array();
  for (const auto& s : m.sequences) {
    Json js;
    js["name"] = s.name;
    if (s.fam >= 0) {
      js["fam"] = m.families[s.fam];
      if (!(s.indices == NatSet::all())) js["indices"] = index_set_string(s.indices);
    } else {
      Json cyc = Json::array();
      for (const auto& p : s.cycle) {
        if (p.core >= 0)
          cyc.push_back(Json{{"core", m.core.label(p.core)}});
        else
          cyc.push_back(Json{{"fam", m.families[p.fam]}, {"idx", p.idx}});
      }
      js["cycle"] = std::move(cyc);
    }
    seqs.push_back(std::move(js));
  }
  j["sequences"] = std::move(seqs);
  return j;
}

// ---------------------------------------------------------------------------

Json completion_to_json(const Completion& c) {
  Json j;
  j["core"] = c.model.core.labels();
  j["families"] = c.model.families;
  Json bd = Json::array();
  for (const auto& bp : c.boundary) {
    Json je;
    je["name"] = bp.name;
    je["past"] = symbolic_to_json(c.model, bp.past);
    je["future"] = symbolic_to_json(c.model, bp.future);
    if (bp.tip >= 0) je["tip"] = c.model.tips[bp.tip].name;
    if (bp.tif >= 0) je["tif"] = c.model.tifs[bp.tif].name;
    bd.push_back(std::move(je));
  }
  j["boundary"] = std::move(bd);
  j["problems"] = c.problems;
  return j;
}

Json report_to_json(const Completion& c, const AdmissibilityReport& r) {
  Json j;
  Json arena;
  arena["points"] = [&] {
    std::vector<std::string> names;
    for (const auto& p : r.arena.points) names.push_back(p.name);
    return names;
  }();
  arena["manifold"] = r.arena.ground.names(r.arena.manifold);
  arena["rank"] = r.arena.rank;
  j["arena"] = std::move(arena);
  j["boundary"] = [&] {
    std::vector<std::string> names;
    for (const auto& bp : c.boundary) names.push_back(bp.name);
    return names;
  }();
  Json claims = Json::array();
  for (const auto& cl : r.claims) {
    Json jc;
    jc["name"] = cl.name;
    jc["verdict"] = cl.verdict == Verdict::Yes   ? "yes"
                    : cl.verdict == Verdict::No ? "no"
                                                : "undecided";
    jc["gating"] = cl.gating;
    jc["detail"] = cl.detail;
    claims.push_back(std::move(jc));
  }
  j["claims"] = std::move(claims);
  j["notes"] = r.notes;
  j["all_passed"] = r.all_passed();
  j["fully_decided"] = r.fully_decided();
  return j;
}

// ---------------------------------------------------------------------------

Json fixture_payload_json(const Fixture& f) {
  switch (f.kind) {
    case FixtureKind::Topology: return topology_to_json(*f.topology, f.designated);
    case FixtureKind::Operator: return operator_to_json(*f.op, f.designated);
    case FixtureKind::Chrono: return model_to_json(*f.model);
    case FixtureKind::Doc: {
      Json j;
      j["id"] = f.id;
      j["kind"] = "doc";
      j["note"] = f.note;
      return j;
    }
  }
  throw PreconditionError("fixture " + f.id + ": unknown kind");
}

Json fixture_manifest_json(const Fixture& f) {
  Json j;
  j["id"] = f.id;
  j["note"] = f.note;
  Json checks = Json::array();
  for (const auto& c : f.manifest) checks.push_back(Json{{"name", c.name}, {"expect", c.expect}});
  j["checks"] = std::move(checks);
  return j;
}

// ---------------------------------------------------------------------------

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw PreconditionError(path + ": cannot write file");
  out << j.dump(2) << '\n';
}

}  // namespace seqtop
