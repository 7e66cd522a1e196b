// Acceptance gate: runs the seven release criteria and prints one verdict
// line each.  Exit status is the number of failed criteria.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "seqtop/enumeration.hpp"
#include "seqtop/fixtures.hpp"
#include "seqtop/formula.hpp"
#include "seqtop/laws.hpp"
#include "seqtop/limit_op.hpp"
#include "seqtop/topology.hpp"

using namespace seqtop;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int g_failures = 0;

void verdict(const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
  if (!ok) ++g_failures;
}

GroundSet letter_ground(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return GroundSet(labels);
}

std::vector<Mask> valid_designations(const FinTopology& t) {
  std::vector<Mask> out;
  for (Mask d = 1; d <= t.ground.full(); ++d)
    if (!designation_problem(t, d).has_value()) out.push_back(d);
  return out;
}

TailLimitOperator random_antitone(std::mt19937_64& rng, int n) {
  GroundSet g([&] {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    return labels;
  }());
  Mask full = g.full();
  std::vector<Mask> table(static_cast<size_t>(full) + 1, 0);
  for (Mask b = 1; b <= full; ++b) {
    Mask cap = full;
    for (int i = 0; i < n; ++i)
      if (b & (Mask{1} << i)) {
        Mask sub = b & ~(Mask{1} << i);
        if (sub) cap &= table[sub];
      }
    table[b] = static_cast<Mask>(rng()) & cap;
    if ((b & (b - 1)) == 0) table[b] |= b;  // constant sequences keep their point
  }
  return make_operator(g, table);
}

// --- criterion 1: refinement separates with exhaustively minimal cost ---
void criterion_separation_sweep() {
  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t topos = 0, desigs = 0, bad = 0;
  std::string first;
  for (int n = 1; n <= 4; ++n) {
    SweepStats s = sweep_separation(n);
    topos += s.topologies;
    desigs += s.designations;
    bad += s.counterexamples;
    if (first.empty() && !s.failures.empty()) first = s.failures.front();
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%llu topologies, %llu designated instances, %llu counterexamples (%.1fs)",
                (unsigned long long)topos, (unsigned long long)desigs, (unsigned long long)bad,
                seconds_since(t0));
  std::string detail = buf;
  if (!first.empty()) detail += "; first: " + first;
  verdict("separation-refinement-sweep", bad == 0 && topos > 0, detail);
}

// --- criterion 2: the starred operator derives the refined topology ---
void criterion_star_route() {
  std::uint64_t cases = 0, bad = 0;
  std::string first;
  for (int n = 1; n <= 4; ++n) {
    GroundSet g = letter_ground(n);
    for (const auto& opens : all_topologies(n)) {
      FinTopology t = make_topology(g, opens);
      TailLimitOperator l = associated_operator(t);
      for (Mask d : valid_designations(t)) {
        ++cases;
        FinTopology refined = separating_refinement(t, d);
        TailLimitOperator star = star_operator(l, d);
        FinTopology via_star = derived_topology(star);
        bool ok = via_star == refined && finer_or_equal(t, refined) &&
                  finer_or_equal(refined, via_star);
        if (!ok) {
          ++bad;
          if (first.empty())
            first = "n=" + std::to_string(n) + " D=" + t.ground.format(d);
        }
      }
    }
  }
  std::string detail = std::to_string(cases) + " instances, " + std::to_string(bad) + " mismatches";
  if (!first.empty()) detail += "; first: " + first;
  verdict("star-route-identity", bad == 0 && cases > 0, detail);
}

// --- criterion 3: operator laws, exhaustive small grounds + random sample ---
void criterion_operator_laws() {
  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t checked = 0, bad = 0;
  for (int n = 1; n <= 3; ++n) {
    GroundSet g = letter_ground(n);
    for (const auto& opens : all_topologies(n)) {
      FinTopology t = make_topology(g, opens);
      TailLimitOperator op = associated_operator(t);
      for (Mask d : valid_designations(t)) {
        ++checked;
        if (!check_operator_laws(op, d).ok()) ++bad;
      }
    }
  }

  std::mt19937_64 rng(20260822u);
  std::uint64_t random_ops = 0;
  for (int round = 0; round < 2500; ++round)
    for (int n = 2; n <= 5; ++n) {
      TailLimitOperator op = random_antitone(rng, n);
      ++random_ops;
      FinTopology t = derived_topology(op);
      for (Mask d : valid_designations(t)) {
        ++checked;
        if (!check_operator_laws(op, d).ok()) ++bad;
      }
    }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%llu random operators, %llu designated law checks, %llu failures (%.1fs)",
                (unsigned long long)random_ops, (unsigned long long)checked,
                (unsigned long long)bad, seconds_since(t0));
  verdict("operator-laws", bad == 0 && random_ops >= 10000, buf);
}

// --- criterion 4: order classification of the worked operators ---
void criterion_order_classification() {
  TailLimitOperator cascade = *make_fixture("cascade-order2").op;
  TailLimitOperator pruned = *make_fixture("pruned").op;
  OperatorOrder oc = order_of(cascade);
  OperatorOrder oa = order_of(associated_operator(derived_topology(cascade)));
  OperatorOrder op = order_of(pruned);
  bool ok = oc.kind == OperatorOrder::Kind::KthOrder && oc.k == 2 &&
            oa.kind == OperatorOrder::Kind::FirstOrder &&
            op.kind == OperatorOrder::Kind::NotAnyOrder;
  std::string detail = "cascade=" + oc.describe() + ", its topology operator=" + oa.describe() +
                       ", pruned=" + op.describe();
  verdict("order-classification", ok, detail);
}

// --- criterion 5: every fixture reproduces its pinned manifest ---
void criterion_fixture_manifests() {
  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t fixtures = 0, checks = 0;
  std::string problem;
  for (const std::string& id : fixture_ids()) {
    try {
      std::vector<std::string> lines = verify_fixture(make_fixture(id));
      ++fixtures;
      checks += lines.size();
    } catch (const std::exception& e) {
      problem = id + ": " + e.what();
      break;
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%llu fixtures, %llu pinned checks (%.1fs)",
                (unsigned long long)fixtures, (unsigned long long)checks, seconds_since(t0));
  verdict("fixture-manifests", problem.empty(), problem.empty() ? buf : problem);
}

// --- criterion 6: predicate compilation agrees with direct evaluation ---
void criterion_predicate_compilation() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(7u);
  const VarNames kN{"n"};
  auto atom = [&]() -> std::string {
    switch (rng() % 9) {
      case 0: return "n>=" + std::to_string(rng() % 7);
      case 1: return "n<=" + std::to_string(rng() % 7);
      case 2: return "n>" + std::to_string(rng() % 7);
      case 3: return "n<" + std::to_string(rng() % 7);
      case 4: return "n==" + std::to_string(rng() % 7);
      case 5: return "n!=" + std::to_string(rng() % 7);
      case 6: {
        std::uint64_t k = 2 + rng() % 4;
        return "n%" + std::to_string(k) + "==" + std::to_string(rng() % k);
      }
      case 7: return "true";
      default: return "false";
    }
  };
  std::function<std::string(int)> gen = [&](int depth) -> std::string {
    if (depth == 0) return atom();
    switch (rng() % 4) {
      case 0: return atom();
      case 1: return "(" + gen(depth - 1) + ")&(" + gen(depth - 1) + ")";
      case 2: return "(" + gen(depth - 1) + ")|(" + gen(depth - 1) + ")";
      default: return "!(" + gen(depth - 1) + ")";
    }
  };
  std::uint64_t formulas = 0, mismatches = 0;
  std::string first;
  for (int i = 0; i < 100000; ++i) {
    Formula f = parse_formula(gen(2), kN);
    ++formulas;
    FormulaScale sc = formula_scale(f);
    std::uint64_t bound = 3 * (1 + sc.C) * sc.K;
    NatSet s = compile_unary(f, 0);
    for (std::uint64_t v = 0; v <= bound; ++v)
      if (s.member(v) != eval_formula(f, v, 0)) {
        ++mismatches;
        if (first.empty()) first = formula_to_string(f, kN) + " at n=" + std::to_string(v);
        break;
      }
  }
  char buf[192];
  std::snprintf(buf, sizeof buf, "%llu predicates, %llu mismatches (%.1fs)",
                (unsigned long long)formulas, (unsigned long long)mismatches, seconds_since(t0));
  std::string detail = buf;
  if (!first.empty()) detail += "; first: " + first;
  verdict("predicate-compilation", mismatches == 0 && formulas >= 100000, detail);
}

// --- criterion 7: density transfer holds wherever its hypothesis does ---
void criterion_density_law() {
  std::uint64_t hypothesis = 0, bad = 0;
  for (int n = 1; n <= 4; ++n) {
    GroundSet g = letter_ground(n);
    for (const auto& opens : all_topologies(n)) {
      FinTopology t = make_topology(g, opens);
      for (Mask d : valid_designations(t)) {
        DensityCheck r = check_density_law(t, d);
        if (r.covered || r.covered_stably) ++hypothesis;
        if (!r.pass) ++bad;
      }
    }
  }
  std::string detail = std::to_string(hypothesis) + " hypothesis-holding instances, " +
                       std::to_string(bad) + " violations";
  verdict("density-law", bad == 0 && hypothesis > 0, detail);
}

}  // namespace

int main() {
  criterion_separation_sweep();
  criterion_star_route();
  criterion_operator_laws();
  criterion_order_classification();
  criterion_fixture_manifests();
  criterion_predicate_compilation();
  criterion_density_law();
  std::printf("%s\n", g_failures == 0 ? "acceptance: all criteria passed"
                                      : "acceptance: criteria FAILED");
  return g_failures;
}
