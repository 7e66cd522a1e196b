#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seqtop/chrono.hpp"
#include "seqtop/limit_op.hpp"
#include "seqtop/topology.hpp"

namespace seqtop {

enum class FixtureKind { Topology, Operator, Chrono, Doc };

// One pinned expectation: `run_check(f, name)` must return `expect` verbatim.
struct ManifestCheck {
  std::string name;
  std::string expect;
};

// A reproducible worked instance plus the expectations pinned to it.  Exactly
// one of topology/op/model is set, matching `kind` (Doc fixtures carry only a
// note).
struct Fixture {
  std::string id;
  FixtureKind kind = FixtureKind::Doc;
  std::string note;
  std::optional<FinTopology> topology;
  Mask designated = 0;  // domain designation for topology/operator fixtures
  std::optional<TailLimitOperator> op;
  std::optional<ChronoModel> model;
  std::vector<ManifestCheck> manifest;
};

std::vector<std::string> fixture_ids();

// Deterministic by construction; unknown ids and unsupported params throw
// PreconditionError.
Fixture make_fixture(const std::string& id,
                     const std::map<std::string, std::string>& params = {});

// Evaluates the named check against the engine and returns the actual value.
std::string run_check(const Fixture& f, const std::string& check);

// Runs every manifest check, throwing PreconditionError on the first mismatch;
// returns the verified "name = value" lines.
std::vector<std::string> verify_fixture(const Fixture& f);

}  // namespace seqtop
