#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seqtop/dotexport.hpp"
#include "seqtop/errors.hpp"
#include "seqtop/io.hpp"
#include "seqtop/laws.hpp"

namespace {

using namespace seqtop;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;
constexpr int kUndecided = 3;

int enum_cap() {
  if (const char* s = std::getenv("SEQTOP_MAX_ENUM")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  return kMaxExhaustiveEnum;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw PreconditionError(out_path + ": cannot write file");
  f << text;
}

void emit_json(const std::string& out_path, const Json& j) { emit(out_path, j.dump(2) + "\n"); }

Mask designation_of(const Json& file, const GroundSet& g, Mask from_file,
                    const std::string& d_flag) {
  if (d_flag.empty()) return from_file;
  Mask m = 0;
  std::stringstream ss(d_flag);
  std::string nm;
  while (std::getline(ss, nm, ',')) m |= bit(g.require(nm));
  (void)file;
  return m;
}

std::string order_label(const OperatorOrder& o) {
  switch (o.kind) {
    case OperatorOrder::Kind::FirstOrder: return "FirstOrder";
    case OperatorOrder::Kind::KthOrder: return "KthOrder(" + std::to_string(o.k) + ")";
    default: return "NotAnyOrder";
  }
}

int run_validate(const std::string& in, const std::string& fmt, const std::string& out) {
  Json j = load_json_file(in);
  std::vector<std::string> problems;
  std::string kind;
  switch (detect_input(j)) {
    case InputKind::Model: {
      kind = "model";
      ChronoModel m = model_from_json(j);
      problems = validate_model(m).all_problems();
      break;
    }
    case InputKind::Topology: {
      kind = "topology";
      Mask d = 0;
      FinTopology t = topology_from_json(j, &d);  // construction validates the axioms
      if (d)
        if (auto p = designation_problem(t, d)) problems.push_back(*p);
      break;
    }
    case InputKind::Operator: {
      kind = "operator";
      Mask d = 0;
      operator_from_json(j, &d);  // construction validates the table laws
      break;
    }
  }
  if (fmt == "json") {
    Json r{{"kind", kind}, {"valid", problems.empty()}, {"problems", problems}};
    emit_json(out, r);
  } else {
    std::string text = kind + ": " + (problems.empty() ? "valid" : "INVALID") + "\n";
    for (const auto& p : problems) text += "  " + p + "\n";
    emit(out, text);
  }
  return problems.empty() ? kOk : kFailed;
}

int run_refine(const std::string& in, const std::string& d_flag, const std::string& fmt,
               const std::string& out) {
  Json j = load_json_file(in);
  Mask d = 0;
  FinTopology t;
  if (detect_input(j) == InputKind::Operator) {
    TailLimitOperator op = operator_from_json(j, &d);
    t = derived_topology(op);
  } else {
    t = topology_from_json(j, &d);
  }
  d = designation_of(j, t.ground, d, d_flag);
  require_designation(t, d);
  FinTopology refined = separating_refinement(t, d);
  TailLimitOperator star = star_operator(associated_operator(t), d);
  FinTopology via_star = derived_topology(star);
  bool chain = finer_or_equal(t, refined) && via_star == refined;
  if (fmt == "json") {
    Json r;
    r["refined"] = topology_to_json(refined, d);
    r["star"] = operator_to_json(star, d);
    r["chain"] = chain ? "agree" : "differ";
    emit_json(out, r);
  } else {
    std::string text = "refined opens:";
    for (Mask o : refined.opens) text += " " + refined.ground.format(o);
    text += "\nstar operator:";
    for (Mask b = 1; b <= star.ground.full(); ++b)
      text += " " + star.ground.format(b) + "->" + star.ground.format(star.table[b]);
    text += "\nchain: " + std::string(chain ? "agree" : "differ") + "\n";
    emit(out, text);
  }
  return chain ? kOk : kFailed;
}

int run_order(const std::string& in, const std::string& fmt, const std::string& out) {
  Json j = load_json_file(in);
  Mask d = 0;
  TailLimitOperator op = detect_input(j) == InputKind::Operator
                             ? operator_from_json(j, &d)
                             : associated_operator(topology_from_json(j, &d));
  OperatorOrder o = order_of(op);
  if (fmt == "json") {
    Json r{{"order", order_label(o)}, {"describe", o.describe()}};
    emit_json(out, r);
  } else {
    emit(out, order_label(o) + "\n");
  }
  return kOk;
}

int run_complete(const std::string& in, const std::string& fmt, const std::string& out) {
  ChronoModel m = model_from_json(load_json_file(in));
  require_valid_model(m);
  Completion c = build_completion(m);
  if (fmt == "dot") {
    emit(out, dot_completion(c));
  } else if (fmt == "json") {
    emit_json(out, completion_to_json(c));
  } else {
    std::string text;
    for (const auto& bp : c.boundary) text += "boundary " + bp.name + "\n";
    if (c.boundary.empty()) text += "boundary empty\n";
    for (const auto& p : c.problems) text += "problem: " + p + "\n";
    emit(out, text);
  }
  return c.problems.empty() ? kOk : kFailed;
}

int run_report(const std::string& in, const std::string& fmt, const std::string& out) {
  ChronoModel m = model_from_json(load_json_file(in));
  require_valid_model(m);
  Completion c = build_completion(m);
  std::vector<NamedSequence> catalog;
  for (const auto& s : c.model.sequences) catalog.push_back({s.name, resolve_sequence(c, s)});
  AdmissibilityReport rep = admissibility_report(c, catalog);
  if (fmt == "json")
    emit_json(out, report_to_json(c, rep));
  else
    emit(out, format_report(rep));
  bool failed = false, undecided = false;
  for (const auto& cl : rep.claims) {
    if (!cl.gating) continue;
    failed |= cl.verdict == Verdict::No;
    undecided |= cl.verdict == Verdict::Undecided;
  }
  return failed ? kFailed : (undecided ? kUndecided : kOk);
}

int run_gen(const std::string& id, const std::vector<std::string>& params,
            const std::string& out, const std::string& manifest_out) {
  std::map<std::string, std::string> pm;
  for (const auto& p : params) {
    auto eq = p.find('=');
    if (eq == std::string::npos) throw PreconditionError("--param expects k=v, got " + p);
    pm[p.substr(0, eq)] = p.substr(eq + 1);
  }
  Fixture f = make_fixture(id, pm);
  if (!out.empty()) emit_json(out, fixture_payload_json(f));
  if (!manifest_out.empty()) emit_json(manifest_out, fixture_manifest_json(f));
  try {
    for (const auto& line : verify_fixture(f)) std::cout << line << "\n";
  } catch (const PreconditionError& e) {
    std::cerr << "manifest mismatch: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}

int run_export_dot(const std::string& in, const std::string& what, const std::string& out) {
  ChronoModel m = model_from_json(load_json_file(in));
  require_valid_model(m);
  if (what == "core") {
    emit(out, dot_core_order(m));
  } else {
    emit(out, dot_completion(build_completion(m)));
  }
  return kOk;
}

int run_suite(const std::string& fmt, const std::string& out) {
  int cap = enum_cap();
  std::string text;
  Json lines = Json::array();
  std::uint64_t bad = 0;
  for (int n = 1; n <= std::min(4, cap); ++n) {
    SweepStats st = sweep_separation(n, cap);
    bad += st.counterexamples;
    text += "n=" + std::to_string(n) + ": " + std::to_string(st.topologies) + " topologies, " +
            std::to_string(st.designations) + " designations, " +
            std::to_string(st.counterexamples) + " counterexamples\n";
    for (const auto& fl : st.failures) text += "  " + fl + "\n";
    lines.push_back(Json{{"n", n},
                         {"topologies", st.topologies},
                         {"designations", st.designations},
                         {"counterexamples", st.counterexamples}});
  }
  if (fmt == "json")
    emit_json(out, Json{{"sweeps", lines}, {"counterexamples", bad}});
  else
    emit(out, text);
  return bad == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite limit-operator topologies and causal completions"};
  app.require_subcommand(1);

  std::string in, out, fmt = "text", d_flag, what = "completion", gen_id, manifest_out;
  std::vector<std::string> params;

  auto add_common = [&](CLI::App* sub, bool needs_in) {
    if (needs_in) sub->add_option("--in", in, "input file")->required();
    sub->add_option("--out", out, "write the primary output here instead of stdout");
    sub->add_option("--format", fmt, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
  };
  add_common(app.add_subcommand("validate", "check a model/topology/operator file"), true);
  CLI::App* refine = app.add_subcommand("refine", "separating refinement and starred operator");
  add_common(refine, true);
  refine->add_option("--D", d_flag, "comma-separated designated points (overrides the file)");
  add_common(app.add_subcommand("order", "classify an operator against its topology"), true);
  add_common(app.add_subcommand("complete", "causal completion of a model"), true);
  add_common(app.add_subcommand("report", "admissibility report for a model"), true);
  CLI::App* gen = app.add_subcommand("gen", "emit a fixture and verify its manifest");
  gen->add_option("id", gen_id, "fixture id")->required();
  gen->add_option("--param", params, "fixture parameter k=v");
  gen->add_option("--out", out, "model/topology/operator file to write");
  gen->add_option("--manifest", manifest_out, "manifest file to write");
  CLI::App* dot = app.add_subcommand("export-dot", "DOT graph of a model");
  add_common(dot, true);
  dot->add_option("--what", what, "core | completion")
      ->check(CLI::IsMember({"core", "completion"}));
  add_common(app.add_subcommand("suite", "exhaustive small-ground sweeps"), false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("validate")) return run_validate(in, fmt, out);
    if (app.got_subcommand("refine")) return run_refine(in, d_flag, fmt, out);
    if (app.got_subcommand("order")) return run_order(in, fmt, out);
    if (app.got_subcommand("complete")) return run_complete(in, fmt, out);
    if (app.got_subcommand("report")) return run_report(in, fmt, out);
    if (app.got_subcommand("gen")) return run_gen(gen_id, params, out, manifest_out);
    if (app.got_subcommand("export-dot")) return run_export_dot(in, what, out);
    if (app.got_subcommand("suite")) return run_suite(fmt, out);
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kBadInput;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kBadInput;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
