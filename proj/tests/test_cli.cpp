#include <doctest.h>

#include <set>

#include "lk/catalog.hpp"
#include "lk/suites.hpp"

using namespace lk;
using nlohmann::json;

TEST_CASE("catalog names resolve and are unique") {
  std::set<std::string> names;
  for (auto &e : catalog()) {
    CHECK(names.insert(e.name).second);
    CHECK(catalog_spec(e.name));
  }
  CHECK_FALSE(catalog_spec("no-such-instance"));
}

TEST_CASE("build is cached by spec hash") {
  auto a = build_named("S4_p2_all");
  auto b = build(*catalog_spec("S4_p2_all"));
  CHECK(a.get() == b.get());
  CHECK(a->group_backed);
  CHECK(a->L->size() == 24);
}

TEST_CASE("malformed specs raise SpecError") {
  CHECK_THROWS_AS(build(json{{"group", {"(0 1)"}}, {"prime", 2}, {"colour", "red"}}), SpecError);
  CHECK_THROWS_AS(build(json{{"group", {"(0 1)"}}, {"prime", 4}}), SpecError);
  CHECK_THROWS_AS(build(json("nope")), SpecError);
}

TEST_CASE("fixtures carry a certification failure instead of throwing") {
  for (auto name : {"S4_p2_corrupt", "A5_p2_notclosed", "S4_p2_nonnormal"}) {
    auto I = build_named(name);
    CHECK(I->fixture);
    REQUIRE(I->cert_failure);
    CHECK_FALSE(I->cert_failure->empty());
  }
}

TEST_CASE("a non-fixture spec that fails certification throws") {
  json spec = *catalog_spec("A5_p2_notclosed");
  spec.erase("fixture");
  spec["name"] = "A5_notclosed_strict";
  CHECK_THROWS_AS(build(spec), CertificationError);
}

TEST_CASE("reports are deterministic and round-trip through JSON") {
  auto I = build_named("SL23_p2_all");
  for (auto &s : suite_ids()) {
    auto a = to_json(run_suite(I, s)).dump(2);
    auto b = to_json(run_suite(I, s)).dump(2);
    CHECK(a == b);
    auto back = suite_from_json(json::parse(a));
    CHECK(to_json(back).dump(2) == a);
  }
}

TEST_CASE("an empty report is valid JSON") {
  SuiteResult r{"none", "axioms", {}};
  auto j = to_json(r);
  CHECK(j["checks"].is_array());
  CHECK(j["checks"].empty());
  CHECK(suite_from_json(j).checks.empty());
  CHECK_FALSE(r.failed());
}

TEST_CASE("inapplicable suites skip with a reason") {
  auto I = build_named("A5_p2_nontrivial");
  auto r = run_suite(I, "components");
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].verdict == "skip");
  CHECK(r.checks[0].witness == std::optional<std::string>("L-not-regular"));
  auto b = run_suite(I, "balance");
  CHECK(b.checks[0].verdict == "skip");
}

TEST_CASE("unknown suites are refused") { CHECK_THROWS(run_suite(build_named("S4_p2_all"), "magic")); }

TEST_CASE("the corrupted table fails the axioms suite with a witness") {
  auto r = run_suite(build_named("S4_p2_corrupt"), "axioms");
  CHECK(r.failed());
  bool found = false;
  for (auto &c : r.checks)
    if (c.id == "partial-group-axioms") {
      CHECK(c.verdict == "fail");
      REQUIRE(c.witness);
      CHECK(c.witness->find(" at (") != std::string::npos);
      found = true;
    }
  CHECK(found);
}
