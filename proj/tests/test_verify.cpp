#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"

#include "entangle/corpus.hpp"
#include "entangle/verify.hpp"

using namespace entangle;

namespace {

// Several cases inspect the same suite run; memoize per (suite, max_n).
const SuiteReport& cached(const std::string& name, int max_n) {
  static std::map<std::pair<std::string, int>, SuiteReport> memo;
  auto key = std::make_pair(name, max_n);
  auto it = memo.find(key);
  if (it == memo.end()) it = memo.emplace(key, run_verification_suite(name, max_n)).first;
  return it->second;
}

const CheckResult* find_check(const SuiteReport& r, const std::string& name) {
  for (const CheckResult& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("suite registry") {
  std::vector<std::string> names = verification_suites();
  CHECK(names.size() == 11);
  CHECK(names.front() == "nestedness");
  CHECK(names.back() == "abstract-graph");
  CHECK_THROWS_AS(run_verification_suite("frobnicate", 4), input_error);
  try {
    run_verification_suite("frobnicate", 4);
  } catch (const input_error& e) {
    // The rejection lists the valid names.
    CHECK(std::string(e.what()).find("nestedness") != std::string::npos);
    CHECK(std::string(e.what()).find("abstract-matroid") != std::string::npos);
  }
}

TEST_CASE("every suite passes on the reduced corpus") {
  for (const std::string& name : verification_suites()) {
    CAPTURE(name);
    const SuiteReport& r = cached(name, 4);
    CHECK(r.suite == name);
    CHECK(r.all_pass());
    CHECK(!r.checks.empty());
    for (const CheckResult& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.name.rfind(name + "/", 0) == 0);
      CHECK(c.witness.is_null());
    }
  }
}

TEST_CASE("check counts follow the corpus") {
  std::size_t corpus4 = corpus(4).size();
  CHECK(corpus4 == 37);  // 27 named + 10 exhaustive
  CHECK(cached("nestedness", 4).checks.size() == corpus4);
  CHECK(cached("tangle-entanglements", 4).checks.size() == corpus4);
  CHECK(cached("canonicality", 4).checks.size() == corpus4);
  CHECK(cached("main-theorem", 4).checks.size() == corpus4 + 1);  // + the bowtie bag pin
  CHECK(cached("wheel-emptiness", 4).checks.size() == 6);
  CHECK(cached("farey-tangle-freeness", 4).checks.size() == 2);
  CHECK(cached("abstract-matroid", 4).checks.size() == 10);
  // 7 named mid-size graphs + 10 exhaustive, four identity checks each.
  CHECK(cached("corner-identities", 4).checks.size() == 68);
}

TEST_CASE("farey suite check list") {
  const SuiteReport& r = cached("farey-entanglements", 4);
  REQUIRE(r.checks.size() == 6);
  CHECK(r.checks[0].name == "farey-entanglements/farey-1/singletons");
  CHECK(r.checks[0].note == "1 singleton entanglement");
  CHECK(r.checks[1].name == "farey-entanglements/farey-1/friendly-contains-nested");
  CHECK(r.checks[2].name == "farey-entanglements/farey-1/nested");
  CHECK(r.checks[3].name == "farey-entanglements/farey-2/singletons");
  CHECK(r.checks[3].note == "5 singleton entanglements");
  CHECK(r.checks[5].name == "farey-entanglements/farey-2/nested");
}

TEST_CASE("tangle suites skip graphs beyond the vertex cap") {
  const CheckResult* skipped = find_check(cached("tangle-entanglements", 4),
                                          "tangle-entanglements/farey-3");
  REQUIRE(skipped);
  CHECK(skipped->pass);
  CHECK(skipped->note.rfind("skipped:", 0) == 0);

  // main-theorem still builds and validates the farey-3 decomposition.
  const CheckResult* built = find_check(cached("main-theorem", 4), "main-theorem/farey-3");
  REQUIRE(built);
  CHECK(built->pass);
  CHECK(built->note.rfind("validated; distinguishing skipped:", 0) == 0);

  // Graphs under the cap carry no skip note.
  const CheckResult* small = find_check(cached("main-theorem", 4), "main-theorem/bowtie");
  REQUIRE(small);
  CHECK(small->pass);
  CHECK(small->note.empty());
}

TEST_CASE("oracle suite coverage accounting") {
  const SuiteReport& r = cached("oracle-equivalence", 4);
  const CheckResult& cov = r.checks.back();
  CHECK(cov.name == "oracle-equivalence/coverage");
  // Every listed check except the coverage row is one compared graph.
  CHECK(cov.note == std::to_string(r.checks.size() - 1) +
                        " of 37 corpus graphs within the 18-proper-separation bound");
  CHECK(find_check(r, "oracle-equivalence/bowtie"));
  // farey-3 has 205921 proper separations, far beyond the oracle bound.
  CHECK_FALSE(find_check(r, "oracle-equivalence/farey-3"));
}

TEST_CASE("backend comparison reports agreement and refusals") {
  const SuiteReport& r = cached("abstract-graph", 4);
  // 20 named graphs with n <= 7, 10 exhaustive ones, one summary row.
  REQUIRE(r.checks.size() == 31);
  CHECK(r.checks.back().name == "abstract-graph/summary");
  CHECK(r.checks.back().note == "22 agreeing, 0 differing, 8 refused of 30 graphs");

  const CheckResult* agree = find_check(r, "abstract-graph/bowtie");
  REQUIRE(agree);
  CHECK(agree->note.rfind("backends agree", 0) == 0);

  // The 5-vertex path's corners collapse, so its setting is refused.
  const CheckResult* refusal = find_check(r, "abstract-graph/path-5");
  REQUIRE(refusal);
  CHECK(refusal->pass);
  CHECK(refusal->note.rfind("setting refused:", 0) == 0);
  CHECK(refusal->note.find("pairwise distinct") != std::string::npos);
}

TEST_CASE("suite reports are byte-deterministic") {
  SuiteReport a = run_verification_suite("corner-identities", 4);
  SuiteReport b = run_verification_suite("corner-identities", 4);
  CHECK(suite_report_to_json(a).dump() == suite_report_to_json(b).dump());
}

TEST_CASE("report serialization shape") {
  SuiteReport r{"demo", {}};
  r.checks.push_back({"demo/ok", true, "", ordered_json()});
  r.checks.push_back({"demo/noted", true, "skipped: cap", ordered_json()});
  ordered_json w;
  w["graph"] = "g";
  r.checks.push_back({"demo/bad", false, "boom", w});
  CHECK_FALSE(r.all_pass());

  ordered_json j = suite_report_to_json(r);
  CHECK(j.dump() ==
        "{\"suite\":\"demo\",\"pass\":false,\"checks\":["
        "{\"name\":\"demo/ok\",\"pass\":true},"
        "{\"name\":\"demo/noted\",\"pass\":true,\"note\":\"skipped: cap\"},"
        "{\"name\":\"demo/bad\",\"pass\":false,\"note\":\"boom\",\"witness\":{\"graph\":\"g\"}}]}");

  SuiteReport empty{"demo", {}};
  CHECK(empty.all_pass());
}
