#include <string>
#include <vector>

#include "doctest.h"
#include "seqtop/errors.hpp"
#include "seqtop/fixtures.hpp"

using namespace seqtop;

TEST_SUITE("fixtures") {
  TEST_CASE("catalog is frozen") {
    CHECK(fixture_ids() == std::vector<std::string>{
                               "sierpinski", "three-point-crust", "cascade-order2", "pruned",
                               "removed-point", "minkowski-ray", "example-A1", "example-A2",
                               "example-A3", "example-A4", "glw-placeholder"});
  }

  TEST_CASE("unknown ids and unsupported params are rejected") {
    CHECK_THROWS_AS(make_fixture("no-such-fixture"), PreconditionError);
    CHECK_THROWS_AS(make_fixture("sierpinski", {{"k", "3"}}), PreconditionError);
    CHECK_THROWS_AS(make_fixture("example-A3", {{"k", "3"}}), PreconditionError);
    CHECK_NOTHROW(make_fixture("example-A3", {{"k", "2"}}));
  }

  TEST_CASE("unknown checks are rejected") {
    Fixture f = make_fixture("sierpinski");
    CHECK_THROWS_AS(run_check(f, "no-such-check"), PreconditionError);
  }

  TEST_CASE("every fixture matches its manifest") {
    for (const std::string& id : fixture_ids()) {
      CAPTURE(id);
      Fixture f = make_fixture(id);
      CHECK(f.id == id);
      std::vector<std::string> lines;
      CHECK_NOTHROW(lines = verify_fixture(f));
      CHECK(lines.size() == f.manifest.size());
    }
  }

  TEST_CASE("a tampered manifest fails loudly") {
    Fixture f = make_fixture("sierpinski");
    REQUIRE(!f.manifest.empty());
    f.manifest[0].expect = "something else";
    CHECK_THROWS_AS(verify_fixture(f), PreconditionError);
  }
}
