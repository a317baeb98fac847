#include "doctest.h"
#include "skein/suites.hpp"

using namespace skein;

TEST_CASE("fast suites pass at n = 2") {
  for (const char* s : {"constants", "hecke", "internal", "annihilators", "oq-hopf", "cobraid", "kauffman2"}) {
    SuiteReport r = run_suite(s, 2, 0);
    CAPTURE(s);
    const Check* bad = r.first_failure();
    CHECK_MESSAGE(bad == nullptr, (bad ? bad->id + ": " + bad->witness : std::string()));
    CHECK(!r.checks.empty());
  }
}

TEST_CASE("constants pass up to n = 5") {
  for (int n = 2; n <= 5; ++n) CHECK(run_suite("constants", n).pass());
}

TEST_CASE("suite reports are deterministic") {
  CHECK(run_suite("internal", 2, 7).to_json().dump() == run_suite("internal", 2, 7).to_json().dump());
  CHECK(run_suite("oq-hopf", 3, 1).to_json().dump() == run_suite("oq-hopf", 3, 1).to_json().dump());
}

TEST_CASE("report layout") {
  SuiteReport r = run_suite("hecke", 2);
  auto j = r.to_json();
  CHECK(j["suite"] == "hecke");
  CHECK(j["n"] == 2);
  CHECK(j["seed"] == 0);
  CHECK(j["pass"] == true);
  CHECK(j["checks"][0].contains("id"));
  CHECK(j["checks"][0]["status"] == "pass");
}

TEST_CASE("suite argument errors") {
  CHECK_THROWS_AS(run_suite("nope", 2), SuiteError);
  CHECK_THROWS_AS(run_suite("kauffman2", 3), SuiteError);
  CHECK_THROWS_AS(run_suite("phi", 5), SuiteError);
  CHECK(suite_names().size() == 10);
}
