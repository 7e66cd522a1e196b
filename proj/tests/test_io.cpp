#include <cstdio>
#include <string>

#include "doctest.h"
#include "seqtop/errors.hpp"
#include "seqtop/io.hpp"

using namespace seqtop;

namespace {

Json payload(const std::string& fixture_id) {
  return fixture_payload_json(make_fixture(fixture_id));
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("input kind detection") {
    CHECK(detect_input(payload("sierpinski")) == InputKind::Topology);
    CHECK(detect_input(payload("cascade-order2")) == InputKind::Operator);
    CHECK(detect_input(payload("removed-point")) == InputKind::Model);
    CHECK_THROWS_AS(detect_input(Json::object()), SchemaError);
  }

  TEST_CASE("topology round trip is canonical") {
    Json j = payload("sierpinski");
    Mask d = 0;
    FinTopology t = topology_from_json(j, &d);
    CHECK(d == Mask{1});
    CHECK(topology_to_json(t, d) == j);
  }

  TEST_CASE("operator round trip is canonical") {
    Json j = payload("cascade-order2");
    Mask d = 0;
    TailLimitOperator op = operator_from_json(j, &d);
    CHECK(operator_to_json(op, d) == j);
  }

  TEST_CASE("model round trips are canonical") {
    for (const char* id : {"removed-point", "minkowski-ray", "example-A2", "example-A3"}) {
      CAPTURE(id);
      Json j = payload(id);
      ChronoModel m = model_from_json(j);
      CHECK(model_to_json(m) == j);
      CHECK(validate_model(m).ok());
    }
  }

  TEST_CASE("operator autofill completes missing rows by intersection") {
    Json j = {{"points", {"a", "b"}},
              {"autofill", "antitone-max"},
              {"table", {{"a", "a"}, {"b", "a,b"}}}};
    TailLimitOperator op = operator_from_json(j, nullptr);
    CHECK(op.at(0b01) == Mask{0b01});
    CHECK(op.at(0b10) == Mask{0b11});
    CHECK(op.at(0b11) == Mask{0b01});  // intersection of the singleton rows
  }

  TEST_CASE("schema errors carry the offending path") {
    Json bad = payload("removed-point");
    bad["rel"]["family_family"][0]["pred"] = "m+n>=2";
    try {
      model_from_json(bad);
      FAIL("expected a schema error");
    } catch (const SchemaError& e) {
      CHECK(std::string(e.what()).find("$.rel.family_family[0].pred") != std::string::npos);
    }

    Json miss = {{"opens", Json::array()}};
    CHECK_THROWS_AS(topology_from_json(miss, nullptr), SchemaError);

    Json unk = payload("removed-point");
    unk["sequences"] = Json::array({Json{{"fam", "zz"}}});
    CHECK_THROWS_AS(model_from_json(unk), SchemaError);

    Json hole = {{"points", {"a", "b"}}, {"table", {{"a", "a"}}}};
    CHECK_THROWS_AS(operator_from_json(hole, nullptr), SchemaError);
  }

  TEST_CASE("completion and report serialization shape") {
    Fixture f = make_fixture("removed-point");
    Completion c = build_completion(*f.model);
    Json cj = completion_to_json(c);
    REQUIRE(cj.contains("boundary"));
    CHECK(cj["boundary"].size() == 1);
    CHECK(cj["boundary"][0]["name"] == "P|F");
    CHECK(cj["problems"].empty());

    AdmissibilityReport r = admissibility_report(c, {});
    Json rj = report_to_json(c, r);
    CHECK(rj["all_passed"] == true);
    CHECK(rj["claims"].size() == 12);
    CHECK(rj["arena"]["rank"] == 1);
  }

  TEST_CASE("file round trip") {
    std::string path = "io_test_tmp.json";
    Json j = payload("three-point-crust");
    save_json_file(path, j);
    CHECK(load_json_file(path) == j);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_json_file(path), SchemaError);
  }
}
