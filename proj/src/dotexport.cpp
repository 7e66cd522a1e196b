#include "seqtop/dotexport.hpp"

#include <string>
#include <vector>

#include "seqtop/symbolic.hpp"

namespace seqtop {
namespace {

std::string q(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

std::string edge(const std::string& a, const std::string& b, const std::string& label = "") {
  std::string out = "  " + q(a) + " -> " + q(b);
  if (!label.empty()) out += " [label=" + q(label) + "]";
  return out + ";\n";
}

// Keeps a->b only when no intermediate c has a->c->b.
std::vector<std::pair<int, int>> reduced_core_edges(const ChronoModel& m) {
  std::vector<std::pair<int, int>> out;
  int n = m.n_cores();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!m.core_core[a][b]) continue;
      bool shortcut = false;
      for (int c = 0; c < n && !shortcut; ++c)
        shortcut = c != a && c != b && m.core_core[a][c] && m.core_core[c][b];
      if (!shortcut) out.emplace_back(a, b);
    }
  return out;
}

const VarNames kMN{"m", "n"};

}  // namespace

std::string dot_core_order(const ChronoModel& m) {
  std::string out = "digraph cores {\n  rankdir=BT;\n";
  for (int i = 0; i < m.n_cores(); ++i) out += "  " + q(m.core.label(i)) + ";\n";
  for (auto [a, b] : reduced_core_edges(m)) out += edge(m.core.label(a), m.core.label(b));
  out += "}\n";
  return out;
}

std::string dot_completion(const Completion& c) {
  const ChronoModel& m = c.model;
  std::string out = "digraph completion {\n  rankdir=BT;\n";
  for (int i = 0; i < m.n_cores(); ++i)
    out += "  " + q(m.core.label(i)) + " [shape=circle];\n";
  for (size_t f = 0; f < m.n_fams(); ++f)
    out += "  " + q(m.families[f]) + " [shape=ellipse,label=" + q(m.families[f] + "(n)") + "];\n";
  for (const auto& bp : c.boundary)
    out += "  " + q(bp.name) + " [shape=diamond];\n";

  auto live = [](const Formula& f) { return f.kind != FKind::False; };
  for (auto [a, b] : reduced_core_edges(m)) out += edge(m.core.label(a), m.core.label(b));
  for (int a = 0; a < m.n_cores(); ++a)
    for (size_t f = 0; f < m.n_fams(); ++f)
      if (live(m.core_fam[a][f]))
        out += edge(m.core.label(a), m.families[f], formula_to_string(m.core_fam[a][f], kMN));
  for (size_t f = 0; f < m.n_fams(); ++f)
    for (int b = 0; b < m.n_cores(); ++b)
      if (live(m.fam_core[f][b]))
        out += edge(m.families[f], m.core.label(b), formula_to_string(m.fam_core[f][b], kMN));
  for (size_t f = 0; f < m.n_fams(); ++f)
    for (size_t g = 0; g < m.n_fams(); ++g)
      if (live(m.fam_fam[f][g]))
        out += edge(m.families[f], m.families[g], formula_to_string(m.fam_fam[f][g], kMN));

  for (const auto& bp : c.boundary) {
    for (int i : indices_of(bp.past.core)) out += edge(m.core.label(i), bp.name);
    for (size_t f = 0; f < m.n_fams(); ++f)
      if (!nat_empty(bp.past.fams[f])) out += edge(m.families[f], bp.name);
    for (int i : indices_of(bp.future.core)) out += edge(bp.name, m.core.label(i));
    for (size_t f = 0; f < m.n_fams(); ++f)
      if (!nat_empty(bp.future.fams[f])) out += edge(bp.name, m.families[f]);
  }
  for (const auto& x : c.boundary)
    for (const auto& y : c.boundary)
      if (&x != &y && !sym_is_empty(sym_intersect(x.future, y.past)))
        out += edge(x.name, y.name, "via overlap");
  out += "}\n";
  return out;
}

}  // namespace seqtop
