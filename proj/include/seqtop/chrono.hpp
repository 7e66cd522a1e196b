#pragma once
#include <string>
#include <vector>

#include "seqtop/formula.hpp"
#include "seqtop/ground.hpp"
#include "seqtop/symbolic.hpp"

namespace seqtop {

// A point of a finitely presented chronological model: either a core point
// (core >= 0) or instance `idx` of family `fam`.
struct ModelPoint {
  int core = -1;
  int fam = -1;
  std::uint64_t idx = 0;

  bool operator==(const ModelPoint&) const = default;

  static ModelPoint core_pt(int i) { return ModelPoint{i, -1, 0}; }
  static ModelPoint fam_pt(int f, std::uint64_t k) { return ModelPoint{-1, f, k}; }
};

// Finitely presented chronological set: finitely many core points plus
// finitely many countable point families, with the strict chronology given by
// boolean entries (core/core) and index predicates (anything involving a
// family; slot 0 is always the left instance index, slot 1 the right one).
struct ChronoModel {
  GroundSet core;
  std::vector<std::string> families;

  std::vector<std::vector<std::uint8_t>> core_core;  // [i][j]: i before j
  std::vector<std::vector<Formula>> core_fam;        // [i][f]: i before f(n), slot 1
  std::vector<std::vector<Formula>> fam_core;        // [f][j]: f(m) before j, slot 0
  std::vector<std::vector<Formula>> fam_fam;         // [f][g]: f(m) before g(n)

  // Declared ideal endpoint: a terminal past (or future) set together with an
  // optional generating chain inside one family.
  struct Endpoint {
    std::string name;
    SymbolicSet set;
    int gen_fam = -1;  // -1: discover a generator during validation
    NatSet gen_indices = NatSet::all();
  };
  std::vector<Endpoint> tips;
  std::vector<Endpoint> tifs;

  // Declared test sequence: either the instances of one family along an
  // infinite index set, or a finite cycle of points visited forever.
  struct Sequence {
    std::string name;
    int fam = -1;
    NatSet indices = NatSet::all();
    std::vector<ModelPoint> cycle;
  };
  std::vector<Sequence> sequences;

  int n_cores() const { return core.size(); }
  size_t n_fams() const { return families.size(); }
  int fam_index(const std::string& name) const;
  int fam_require(const std::string& name) const;
};

// Same points, reversed chronology; declared pasts and futures swap roles.
ChronoModel transpose(const ChronoModel& m);

// Joint scale of every relation predicate in the model.
FormulaScale model_scale(const ChronoModel& m);

bool point_before(const ChronoModel& m, const ModelPoint& x, const ModelPoint& y);
std::string describe_point(const ChronoModel& m, const ModelPoint& p);

SymbolicSet past_of_core(const ChronoModel& m, int i);
SymbolicSet past_of_fam(const ChronoModel& m, int f, std::uint64_t k);
SymbolicSet past_of_point(const ChronoModel& m, const ModelPoint& p);

// Union of the pasts of the members of S.
SymbolicSet past_of_set(const ChronoModel& m, const SymbolicSet& s);
// Points strictly before every member of S.
SymbolicSet points_before_all(const ChronoModel& m, const SymbolicSet& s);
// The common past of S: the past of points_before_all(S).
SymbolicSet common_past(const ChronoModel& m, const SymbolicSet& s);

// Index sets of instances of family g whose past contains / lies within /
// equals S.  Exact over all indices (two-variable eliminations).
NatSet fam_past_contains(const ChronoModel& m, int g, const SymbolicSet& s);
NatSet fam_past_within(const ChronoModel& m, int g, const SymbolicSet& s);
NatSet fam_past_equals(const ChronoModel& m, int g, const SymbolicSet& s);

struct ModelValidation {
  std::vector<std::string> irreflexivity;
  std::vector<std::string> transitivity;   // checked on the small-model cube
  std::vector<std::string> distinguishing; // pasts exact vs cores, windowed between families
  std::vector<std::string> endpoints;
  std::vector<std::string> sequences;

  bool ok() const {
    return irreflexivity.empty() && transitivity.empty() && distinguishing.empty() &&
           endpoints.empty() && sequences.empty();
  }
  std::vector<std::string> all_problems() const;
};

ModelValidation validate_model(const ChronoModel& m);
void require_valid_model(const ChronoModel& m);

}  // namespace seqtop
