#pragma once
#include <string>

#include "json.hpp"
#include "seqtop/chrono.hpp"
#include "seqtop/completion.hpp"
#include "seqtop/fixtures.hpp"
#include "seqtop/limit_op.hpp"
#include "seqtop/report.hpp"
#include "seqtop/topology.hpp"

namespace seqtop {

using Json = nlohmann::json;

// What a loaded input file describes, detected from its top-level keys.
enum class InputKind { Topology, Operator, Model };
InputKind detect_input(const Json& j);

// Topologies: {"points":[...], "opens":[[...],...], "D":[...]}.
Json topology_to_json(const FinTopology& t, Mask designated);
FinTopology topology_from_json(const Json& j, Mask* designated);

// Limit operators: {"points":[...], "table":{"a":"a,b",...}, "D":[...]};
// "autofill":"antitone-max" fills missing multi-point rows from the
// singleton rows by intersection.
Json operator_to_json(const TailLimitOperator& op, Mask designated);
TailLimitOperator operator_from_json(const Json& j, Mask* designated);

// Chronological models; see the schema walkthrough in the README.
Json model_to_json(const ChronoModel& m);
ChronoModel model_from_json(const Json& j);

Json symbolic_to_json(const ChronoModel& m, const SymbolicSet& s);

Json completion_to_json(const Completion& c);
Json report_to_json(const Completion& c, const AdmissibilityReport& r);

// Fixture payload in the matching schema above, and its pinned manifest.
Json fixture_payload_json(const Fixture& f);
Json fixture_manifest_json(const Fixture& f);

// SchemaError on unreadable or unparsable input.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace seqtop
