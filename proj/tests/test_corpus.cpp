#include "doctest.h"

#include <filesystem>
#include <map>
#include <tuple>

#include "grl/corpus.hpp"
#include "grl/error.hpp"
#include "grl/grading_properties.hpp"
#include "grl/io.hpp"
#include "oracles.hpp"

using namespace grl;

namespace {

const Corpus& default_corpus() {
  static const Corpus c = generate_corpus(default_manifest());
  return c;
}

std::size_t count_of(const json& summary, const std::string& verdict, const std::string& value) {
  const auto& vc = summary["verdict_counts"];
  if (!vc.contains(verdict)) return 0;
  return vc[verdict].value(value, std::size_t{0});
}

}  // namespace

TEST_SUITE("corpus") {
  TEST_CASE("exhaustive section matches the brute-force counts") {
    const auto& log = default_corpus().log["exhaustive"];
    for (int n = 1; n <= 3; ++n) {
      CHECK(log[std::to_string(n)]["associative"].get<std::size_t>() == oracle::count_associative(n));
    }
    CHECK(log["1"]["associative"] == 1);
    CHECK(log["2"]["associative"] == 8);
    CHECK(log["3"]["associative"] == 113);
  }

  TEST_CASE("every entry round-trips through JSON and validates again") {
    const auto& c = default_corpus();
    CHECK(c.semigroups.size() > 122);
    CHECK(c.graded.size() >= 30);
    for (const auto& e : c.semigroups) CHECK(semigroup_from_json(to_json(e.value)) == e.value);
    for (const auto& e : c.rings) CHECK(ring_from_json(to_json(e.value)) == e.value);
    for (const auto& e : c.groupoids) CHECK(groupoid_from_json(to_json(e.value)) == e.value);
    for (const auto& e : c.graded) CHECK(graded_from_json(to_json(e.value)) == e.value);
  }

  TEST_CASE("the empty manifest gives an empty corpus") {
    const Corpus c = generate_corpus(manifest_from_json(json::object()));
    CHECK(c.semigroups.empty());
    CHECK(c.rings.empty());
    CHECK(c.groupoids.empty());
    CHECK(c.graded.empty());
    CHECK(c.good_gradings.empty());
    const auto r = run_suite(c, "all");
    CHECK(r.agreement);
    CHECK(r.summary["disagreement_count"] == 0);
  }

  TEST_CASE("manifest round trip and the shipped file") {
    const json j = to_json(default_manifest());
    CHECK(to_json(manifest_from_json(j)) == j);
    const std::filesystem::path shipped = std::filesystem::path(GRL_SOURCE_DIR) / "corpus" / "manifest.json";
    REQUIRE(std::filesystem::exists(shipped));
    CHECK(to_json(manifest_from_json(read_json_file(shipped))) == j);
    CHECK_THROWS_AS(manifest_from_json(json{{"semigroups", {{"exhaustive_max_order", 4}}}}), ParseError);
  }

  TEST_CASE("bad manifest entries name the entry") {
    json j = json::object();
    j["rings"] = json::array({"Q7"});
    try {
      generate_corpus(manifest_from_json(j));
      FAIL("expected a validation failure");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == "ValidationFailed");
    }
  }

  TEST_CASE("suite runs are deterministic, also across worker counts") {
    const auto& c = default_corpus();
    for (const std::string suite : {"main", "semigroup-ring", "groupoid"}) {
      const auto a = run_suite(c, suite, {1, 2, 100});
      const auto b = run_suite(c, suite, {3, 2, 100});
      CHECK(strip_timings(a.summary) == strip_timings(b.summary));
      CHECK(a.entries == b.entries);
    }
    CHECK_THROWS_AS(run_suite(c, "nope"), Error);
  }

  TEST_CASE("every suite agrees on the default corpus and both verdicts occur") {
    const auto& c = default_corpus();
    const auto all = run_suite(c, "all", {2, 2, 20});
    CHECK(all.agreement);
    CHECK(all.summary["disagreement_count"] == 0);
    const auto& s = all.summary["suites"];
    for (const auto& name : suite_names()) {
      CAPTURE(name);
      CHECK(s[name]["applicable"].get<std::size_t>() > 0);
      CHECK(s[name]["disagreements"].empty());
    }
    CHECK(count_of(s["main"], "graded_vnr", "true") > 0);
    CHECK(count_of(s["main"], "graded_vnr", "false") > 0);
    CHECK(count_of(s["main"], "nearly_epsilon_strong", "false") > 0);
    CHECK(count_of(s["main"], "base_components_vnr", "false") > 0);
    CHECK(count_of(s["semigroup-ring"], "graded_vnr", "false") > 0);
    CHECK(count_of(s["semigroup-ring"], "graded_vnr", "true") > 0);
    CHECK(count_of(s["groupoid"], "homogeneous_in_rRr", "true") > 0);
    CHECK(count_of(s["groupoid"], "homogeneous_in_rRr", "false") > 0);
    CHECK(count_of(s["eps-char"], "epsilon_strong_definition", "false") > 0);
    CHECK(count_of(s["eps-char"], "nearly_epsilon_strong_definition", "true") > 0);
  }

  TEST_CASE("verdict cells: regular x {epsilon-strong, nearly only, neither} x base kind") {
    std::map<std::tuple<bool, std::string, bool>, std::size_t> cells;
    for (const auto& e : default_corpus().graded) {
      const auto& r = e.value;
      const auto vnr = is_graded_vnr(r);
      if (vnr.vacuous) continue;
      const bool eps = is_epsilon_strong(r).holds;
      const bool nearly = is_nearly_epsilon_strong(r).holds;
      const std::string strength = eps ? "eps" : nearly ? "nearly" : "neither";
      ++cells[{vnr.holds, strength, r.base().is_groupoid()}];
    }
    for (bool groupoid : {false, true}) {
      CAPTURE(groupoid);
      CHECK(cells[{true, "eps", groupoid}] > 0);
      CHECK(cells[{false, "eps", groupoid}] > 0);
      CHECK(cells[{false, "neither", groupoid}] > 0);
      // Finite nearly epsilon-strong gradings are epsilon-strong, and graded
      // regularity forces nearly epsilon-strong, so these cells stay empty.
      CHECK(cells[{true, "nearly", groupoid}] == 0);
      CHECK(cells[{false, "nearly", groupoid}] == 0);
      CHECK(cells[{true, "neither", groupoid}] == 0);
    }
  }

  TEST_CASE("corpus files carry an index and one file per structure") {
    const auto& c = default_corpus();
    const auto files = corpus_files(c);
    CHECK(files.size() == c.semigroups.size() + c.rings.size() + c.groupoids.size() + c.graded.size() + 1);
    bool has_index = false;
    for (const auto& [name, body] : files) {
      if (name == "index.json") {
        has_index = true;
        continue;
      }
      CHECK(body.contains("kind"));
    }
    CHECK(has_index);
  }
}
