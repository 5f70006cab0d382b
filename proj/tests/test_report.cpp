#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mds/report.hpp"

using namespace mds;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(MDS_FIXTURES) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraDocument fixture_algebra(const std::string& name) {
  return parse_algebra_text(read_fixture(name));
}

bool ids_start_with(const InstanceReport& rep, const std::string& prefix) {
  for (const auto& c : rep.checks)
    if (c.id.rfind(prefix, 0) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("shipped algebra fixtures pass every suite") {
  for (const char* name : {"diamond.alg", "chain3.alg", "bool4.alg"}) {
    CAPTURE(name);
    InstanceReport rep =
        check_algebra(name, fixture_algebra(name), kSuiteAll);
    for (const auto& c : rep.checks) {
      CAPTURE(c.id);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
    CHECK(rep.checks.size() > 30);
  }
}

TEST_CASE("suites group checks by id prefix") {
  AlgebraDocument doc = fixture_algebra("diamond.alg");
  CHECK(ids_start_with(check_algebra("d", doc, kSuiteRepresentation), "rep."));
  CHECK(ids_start_with(check_algebra("d", doc, kSuiteDuality), "dual."));
  CHECK(ids_start_with(check_algebra("d", doc, kSuiteAxioms), "ax."));
  CHECK(ids_start_with(check_algebra("d", doc, kSuiteCanonicity), "can."));
  // boolean suite emits nothing for a plain algebra
  CHECK(check_algebra("d", doc, kSuiteBoolean).checks.empty());
  InstanceReport boolean =
      check_algebra("b", fixture_algebra("bool4.alg"), kSuiteBoolean);
  CHECK(!boolean.checks.empty());
  CHECK(ids_start_with(boolean, "bool."));

  CHECK(suite_from_name("all") == kSuiteAll);
  CHECK(suite_from_name("duality") == kSuiteDuality);
  CHECK_THROWS_AS(suite_from_name("nonsense"), ParseError);
}

TEST_CASE("the distributivity gate stops a non-distributive algebra") {
  InstanceReport rep =
      check_algebra("m3", fixture_algebra("m3.alg"), kSuiteAll);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].id == "rep.distributive");
  CHECK(!rep.checks[0].pass);
  CHECK(rep.checks[0].detail.find("x") != std::string::npos);
  CHECK(!rep.all_pass());
}

TEST_CASE("operator-free documents run the passive checks only") {
  AlgebraDocument doc = fixture_algebra("diamond.alg");
  doc.op.reset();
  InstanceReport rep = check_algebra("d", doc, kSuiteAll);
  CHECK(rep.all_pass());
  for (const auto& c : rep.checks) {
    CHECK(c.id.rfind("ax.", 0) != 0);
    CHECK(c.id.rfind("can.", 0) != 0);
    CHECK(c.id != "rep.operator_commutes");
  }
  CHECK(check_algebra("d", doc, kSuiteAxioms).checks.empty());
}

TEST_CASE("space and relation documents verify under duality") {
  SpaceDocument space = parse_space_text(read_fixture("chain2.dss"));
  InstanceReport srep = check_space("s", space, kSuiteAll);
  CHECK(srep.checks.size() == 3);
  CHECK(srep.all_pass());

  RelationDocument rel =
      parse_relation_text(read_fixture("diamond_m.srel"));
  InstanceReport rrep = check_relation("r", rel, kSuiteAll);
  CHECK(rrep.all_pass());
  CHECK(rrep.checks.size() == 5);

  RelationDocument broken =
      parse_relation_text(read_fixture("diamond_m_broken.srel"));
  InstanceReport brep = check_relation("rb", broken, kSuiteAll);
  CHECK(!brep.all_pass());
  bool cond2_failed = false;
  for (const auto& c : brep.checks) {
    if (c.id == "mon.condition2") {
      cond2_failed = !c.pass;
      CHECK(c.detail.find("point p") != std::string::npos);
    }
    if (c.id == "mon.condition1") CHECK(c.pass);
    if (c.id == "mon.components") CHECK(c.pass);
  }
  CHECK(cond2_failed);

  // The duality gate: other suites add nothing for spaces and relations.
  CHECK(check_space("s", space, kSuiteRepresentation).checks.empty());
  CHECK(check_relation("r", rel, kSuiteAxioms).checks.empty());
}

TEST_CASE("fuzz stream is green and byte-deterministic") {
  Report a = fuzz_report(7, 25, 6, kSuiteAll);
  CHECK(a.instances.size() == 25);
  CHECK(a.all_pass());
  CHECK(a.fail_count() == 0);
  CHECK(a.instances[0].instance == "fuzz/000000");
  Report b = fuzz_report(7, 25, 6, kSuiteAll);
  CHECK(render_text(a, false, 0) == render_text(b, false, 0));
  CHECK(render_json(a, false, 0) == render_json(b, false, 0));
  Report c = fuzz_report(8, 5, 6, kSuiteAll);
  CHECK(render_text(a, false, 0) != render_text(c, false, 0));
}

TEST_CASE("renderings carry verdicts, summary and optional timing") {
  Report r;
  r.instances.push_back(
      check_algebra("z", fixture_algebra("diamond.alg"), kSuiteAll));
  r.instances.push_back(
      check_algebra("a", fixture_algebra("m3.alg"), kSuiteAll));
  std::string text = render_text(r, false, 0);
  CHECK(text.find("[PASS] rep.beta_injective") != std::string::npos);
  CHECK(text.find("[FAIL] rep.distributive") != std::string::npos);
  CHECK(text.find("result FAIL") != std::string::npos);
  CHECK(text.find("elapsed_ms") == std::string::npos);
  // instances are ordered by id: the failing "a" instance comes first
  CHECK(text.find("instance a") < text.find("instance z"));
  std::string timed = render_text(r, true, 42);
  CHECK(timed.find("elapsed_ms 42") != std::string::npos);

  nlohmann::json j = nlohmann::json::parse(render_json(r, true, 42));
  CHECK(j["result"] == "FAIL");
  CHECK(j["instances"].size() == 2);
  CHECK(j["instances"][0]["id"] == "a");
  CHECK(j["summary"]["fail"] == 1);
  CHECK(j["elapsed_ms"] == 42);
  nlohmann::json plain = nlohmann::json::parse(render_json(r, false, 42));
  CHECK(!plain.contains("elapsed_ms"));
}

TEST_CASE("shrinking deletes elements while the failure survives") {
  // A non-distributive core with a hanging bottom: the bottom can go, the
  // core cannot.
  std::string text =
      "kind mds\nelements n b x y z 1\ntop 1\n"
      "meet n b = n\nmeet n x = n\nmeet n y = n\nmeet n z = n\n"
      "meet b x = b\nmeet b y = b\nmeet b z = b\n"
      "meet x y = b\nmeet x z = b\nmeet y z = b\n";
  AlgebraDocument doc = parse_algebra_text(text);
  CHECK(!check_algebra("big", doc, kSuiteAll).all_pass());
  AlgebraDocument small = shrink_algebra(doc, kSuiteAll);
  CHECK(small.names == std::vector<std::string>{"b", "x", "y", "z", "1"});
  CHECK(!check_algebra("small", small, kSuiteAll).all_pass());

  // An already-minimal counterexample shrinks to itself.
  AlgebraDocument m3 = fixture_algebra("m3.alg");
  CHECK(shrink_algebra(m3, kSuiteAll).names == m3.names);

  // A passing document is left alone.
  AlgebraDocument good = fixture_algebra("diamond.alg");
  CHECK(shrink_algebra(good, kSuiteAll).names == good.names);
}
