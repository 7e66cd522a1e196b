#include "seqtop/limit_op.hpp"

#include <algorithm>

namespace seqtop {

OperatorValidation validate_operator(const TailLimitOperator& op) {
  OperatorValidation v;
  const int n = op.ground.size();
  const Mask full = op.ground.full();
  for (int x = 0; x < n; ++x)
    if (!has(op.table[bit(x)], x)) {
      v.coherent = false;
      v.coherence_failures |= bit(x);
    }
  // Antitonicity over one-point deletions implies it for all subprofiles.
  for (Mask a = 1; a <= full; ++a)
    for (int i : indices_of(a)) {
      Mask b = a & ~bit(i);
      if (b == 0) continue;
      if (!subset_of(op.table[a], op.table[b])) {
        v.antitone = false;
        if (v.antitone_violations.size() < 16) v.antitone_violations.emplace_back(a, b);
      }
    }
  return v;
}

TailLimitOperator make_operator(GroundSet g, std::vector<Mask> table) {
  if (g.size() > kMaxTable)
    throw CapacityError("operator tables are limited to " + std::to_string(kMaxTable) + " points");
  if (table.size() != (size_t{1} << g.size()))
    throw PreconditionError("operator table must have one row per profile");
  table[0] = 0;
  TailLimitOperator op{std::move(g), std::move(table)};
  OperatorValidation v = validate_operator(op);
  if (!v.antitone)
    throw PreconditionError("operator table is not antitone at profile " +
                            op.ground.format(v.antitone_violations.front().first));
  if (!v.coherent)
    throw PreconditionError("operator table is not coherent: constant sequence at " +
                            op.ground.format(v.coherence_failures) + " misses its own point");
  return op;
}

std::vector<Mask> union_over_subprofiles(const TailLimitOperator& op) {
  const int n = op.ground.size();
  std::vector<Mask> g = op.table;
  for (int i = 0; i < n; ++i)
    for (Mask a = 0; a < (Mask{1} << n); ++a)
      if (has(a, i)) g[a] |= g[a & ~bit(i)];
  return g;
}

FinTopology derived_topology(const TailLimitOperator& op) {
  const Mask full = op.ground.full();
  std::vector<Mask> g = union_over_subprofiles(op);
  std::vector<Mask> opens;
  for (Mask c = 0;; ++c) {  // c runs over candidate closed sets
    if (subset_of(g[c], c)) opens.push_back(full & ~c);
    if (c == full) break;
  }
  std::sort(opens.begin(), opens.end());
  FinTopology t{op.ground, std::move(opens), {}};
  t.min_nbhd.assign(op.ground.size(), full);
  for (Mask u : t.opens)
    for (int p : indices_of(u)) t.min_nbhd[p] &= u;
  return t;
}

TailLimitOperator associated_operator(const FinTopology& t) {
  if (t.ground.size() > kMaxTable)
    throw CapacityError("operator tables are limited to " + std::to_string(kMaxTable) + " points");
  const Mask full = t.ground.full();
  std::vector<Mask> table(size_t{1} << t.ground.size(), 0);
  for (Mask a = 1; a <= full; ++a)
    for (int p = 0; p < t.ground.size(); ++p)
      if (subset_of(a, t.min_nbhd[p])) table[a] |= bit(p);
  return TailLimitOperator{t.ground, std::move(table)};
}

TailLimitOperator restrict_operator(const TailLimitOperator& op, Mask d) {
  FinTopology t = derived_topology(op);
  if (!t.is_open(d))
    throw PreconditionError("restriction domain " + op.ground.format(d) +
                            " is not open in the derived topology");
  std::vector<std::string> labels;
  std::vector<int> old_of_new;
  for (int i = 0; i < op.ground.size(); ++i)
    if (has(d, i)) {
      labels.push_back(op.ground.label(i));
      old_of_new.push_back(i);
    }
  GroundSet g(labels);
  auto expand = [&](Mask m) {
    Mask out = 0;
    for (int k = 0; k < g.size(); ++k)
      if (has(m, k)) out |= bit(old_of_new[k]);
    return out;
  };
  auto compress = [&](Mask m) {
    Mask out = 0;
    for (int k = 0; k < g.size(); ++k)
      if (has(m, old_of_new[k])) out |= bit(k);
    return out;
  };
  std::vector<Mask> table(size_t{1} << g.size(), 0);
  for (Mask a = 1; a < (Mask{1} << g.size()); ++a) table[a] = compress(op.table[expand(a)] & d);
  return TailLimitOperator{std::move(g), std::move(table)};
}

IterationResult iterate_operator(const TailLimitOperator& op, int up_to) {
  const int n = op.ground.size();
  std::vector<Mask> g = union_over_subprofiles(op);
  IterationResult r;
  r.tables.push_back(op.table);
  int limit = up_to > 0 ? up_to : n + 1;
  r.stable_at = 0;
  for (int step = 2; step <= limit; ++step) {
    const std::vector<Mask>& prev = r.tables.back();
    std::vector<Mask> next(prev.size(), 0);
    for (Mask a = 1; a < (Mask{1} << n); ++a) next[a] = prev[a] == 0 ? 0 : g[prev[a]];
    bool stable = next == prev;
    if (stable && r.stable_at == 0) r.stable_at = step - 1;
    if (stable && up_to == 0) break;
    r.tables.push_back(std::move(next));
  }
  return r;
}

std::string OperatorOrder::describe() const {
  switch (kind) {
    case Kind::FirstOrder: return "first order";
    case Kind::KthOrder: return "order " + std::to_string(k);
    default: return "not of any order";
  }
}

OperatorOrder order_of(const TailLimitOperator& op) {
  TailLimitOperator target = associated_operator(derived_topology(op));
  if (op.table == target.table) return {OperatorOrder::Kind::FirstOrder, 1};
  IterationResult it = iterate_operator(op, op.ground.size() + 1);
  for (size_t i = 1; i < it.tables.size(); ++i)
    if (it.tables[i] == target.table)
      return {OperatorOrder::Kind::KthOrder, static_cast<int>(i) + 1};
  return {OperatorOrder::Kind::NotAnyOrder, 0};
}

bool first_order_on(const TailLimitOperator& op, Mask d) {
  FinTopology t = derived_topology(op);
  bool ok = true;
  for_each_submask(d, [&](Mask a) {
    if (a == 0 || !ok) return;
    for (int p : indices_of(d)) {
      bool in_op = has(op.table[a], p);
      bool in_top = subset_of(a, t.min_nbhd[p]);
      if (in_op != in_top) ok = false;
    }
  });
  return ok;
}

TailLimitOperator star_operator(const TailLimitOperator& op, Mask d) {
  FinTopology t = derived_topology(op);
  require_designation(t, d);
  std::vector<Mask> g = union_over_subprofiles(op);
  std::vector<Mask> table(op.table.size(), 0);
  for (Mask a = 1; a < static_cast<Mask>(op.table.size()); ++a)
    table[a] = (g[a] & d) ? (op.table[a] & d) : op.table[a];
  TailLimitOperator out{op.ground, std::move(table)};
  if (op.ground.size() <= 12) {
    OperatorValidation v = validate_operator(out);
    if (!v.ok())
      throw PreconditionError("separating modification produced an invalid operator");
  }
  return out;
}

bool pointwise_leq(const TailLimitOperator& smaller, const TailLimitOperator& larger) {
  for (size_t a = 0; a < smaller.table.size(); ++a)
    if (!subset_of(smaller.table[a], larger.table[a])) return false;
  return true;
}

}  // namespace seqtop
