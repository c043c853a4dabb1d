#include "grl/corpus.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <thread>

#include "grl/constructions.hpp"
#include "grl/error.hpp"
#include "grl/theorem_checks.hpp"

namespace grl {

namespace {

std::string spec_id(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::vector<json> list_of(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  const json& v = j.at(key);
  if (!v.is_array()) throw ParseError(std::string(key) + " must be an array");
  return std::vector<json>(v.begin(), v.end());
}

const json& section(const json& j, const char* key) {
  static const json empty = json::object();
  if (!j.contains(key)) return empty;
  if (!j.at(key).is_object()) throw ParseError(std::string(key) + " must be an object");
  return j.at(key);
}

std::size_t size_or(const json& j, const char* key, std::size_t fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_unsigned()) throw ParseError(std::string(key) + " must be a count");
  return j.at(key).get<std::size_t>();
}

template <class F>
auto build_entry(const std::string& id, F&& f) {
  try {
    return f();
  } catch (const ValidationError& e) {
    throw ValidationError("ValidationFailed", e.witness(), "entry " + id + ": " + e.what());
  } catch (const Error& e) {
    throw ValidationError("ValidationFailed", {}, "entry " + id + ": " + e.what());
  }
}

RawGrading to_raw(const GradedRing& r) {
  RawGrading raw{r.base(), r.components(), {}};
  for (auto [s, t] : r.product_pairs()) raw.products[{s, t}] = *r.product_table(s, t);
  return raw;
}

}  // namespace

CorpusManifest default_manifest() {
  CorpusManifest m;
  m.seed = 20231117;
  m.exhaustive_max_order = 3;
  m.sampled_order = 4;
  m.sampled_count = 6;
  m.semigroups = {"L2", "R2", "SL2", "SL3", "Z2", "Z3", "Z4", "B1", "B2", "B3", "N2",
                  json{{"named", "monogenic"}, {"index", 2}, {"period", 1}},
                  json{{"named", "monogenic"}, {"index", 2}, {"period", 2}}};
  m.rings = {"Z2", "Z3", "Z4", "Z6", "Z8", "Z9", "F4", "Z2xZ2",
             json{{"named", "zero"}, {"n", 2}},
             json{{"named", "zero"}, {"n", 3}},
             "2Z8", "M2(Z2)",
             // Matrices [[a, b], [0, 0]]: left but not right s-unital.
             json{{"named", "subring"}, {"A", "M2(Z2)"}, {"generators", {8, 4}}}};
  m.groupoids = {"trivial", "pair2", "pair3",
                 json{{"named", "group"}, {"S", "Z2"}},
                 json{{"named", "group"}, {"S", "Z3"}},
                 json{{"named", "disjoint_union"}, {"parts", {"pair2", "trivial"}}},
                 json{{"named", "disjoint_union"},
                      {"parts", {json{{"named", "group"}, {"S", "Z2"}}, "pair2"}}}};
  m.semigroup_ring_rings = {"Z2", "Z3", "Z4", "Z6"};
  m.semigroup_ring_bases = {"L2", "R2", "SL2", "SL3", "Z2", "Z3", "B1", "B2", "N2",
                            json{{"named", "monogenic"}, {"index", 2}, {"period", 1}}};
  m.matrix_bn_rings = {"Z2", "Z3", "Z4"};
  m.matrix_bn_sizes = {1, 2, 3};
  using rows = std::vector<std::vector<int>>;
  m.good_gradings = {
      // Z2 = {e, g}: diagonal in degree e, off-diagonal in degree g.
      {{"A", "Z2"}, {"S", "Z2"}, {"deg", rows{{0, 1}, {1, 0}}}},
      {{"A", "Z4"}, {"S", "Z2"}, {"deg", rows{{0, 1}, {1, 0}}}},
      {{"A", "Z3"}, {"S", "Z2"}, {"deg", rows{{0, 1}, {1, 0}}}},
      // deg(i, j) = j - i mod 3.
      {{"A", "Z2"}, {"S", "Z3"}, {"deg", rows{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}}},
      // deg(i, j) = e_ij in B_2.
      {{"A", "Z2"}, {"S", "B2"}, {"deg", rows{{1, 2}, {3, 4}}}},
      {{"A", "Z4"}, {"S", "B2"}, {"deg", rows{{1, 2}, {3, 4}}}},
      // Block gradings: R_e contains off-diagonal units.
      {{"A", "Z2"}, {"S", "Z2"}, {"deg", rows{{0, 0, 1}, {0, 0, 1}, {1, 1, 0}}}},
      {{"A", "Z2"}, {"S", "Z1"}, {"deg", rows{{0, 0}, {0, 0}}}}};
  m.groupoid_ring_rings = {"Z2", "Z3", "Z4", "Z6"};
  m.groupoid_ring_bases = {"trivial", "pair2",
                           json{{"named", "group"}, {"S", "Z2"}},
                           json{{"named", "disjoint_union"}, {"parts", {"pair2", "trivial"}}}};
  m.zero_product_rings = {"Z2", "Z3"};
  m.zero_product_bases = {"SL2", "B2", "Z2", "pair2", json{{"named", "group"}, {"S", "Z2"}}};
  m.mutation_sources = {
      json{{"construct", "matrix_bn"}, {"A", "Z2"}, {"n", 2}},
      json{{"construct", "semigroup_ring"}, {"A", "Z6"}, {"S", "SL2"}},
      json{{"construct", "groupoid_ring"}, {"A", "Z2"}, {"G", "pair2"}}};
  m.mutations_per_source = 3;
  m.extra_graded = {
      json{{"construct", "groupoid_ring"}, {"A", "Z2"}, {"G", "pair3"}},
      json{{"construct", "groupoid_ring"}, {"A", "Z4"}, {"G", "pair3"}},
      json{{"construct", "semigroup_ring"}, {"A", json{{"named", "zero"}, {"n", 2}}}, {"S", "SL2"}},
      json{{"construct", "semigroup_ring"}, {"A", json{{"named", "zero"}, {"n", 2}}}, {"S", "B2"}},
      json{{"construct", "semigroup_ring"}, {"A", "2Z8"}, {"S", "Z2"}},
      json{{"construct", "semigroup_ring"}, {"A", "F4"}, {"S", "B2"}},
      json{{"construct", "matrix_bn"}, {"A", "F4"}, {"n", 2}}};
  return m;
}

json to_json(const CorpusManifest& m) {
  return {{"seed", m.seed},
          {"semigroups",
           {{"exhaustive_max_order", m.exhaustive_max_order},
            {"sampled", {{"order", m.sampled_order}, {"count", m.sampled_count}}},
            {"named", m.semigroups}}},
          {"rings", m.rings},
          {"groupoids", m.groupoids},
          {"graded",
           {{"semigroup_ring", {{"A", m.semigroup_ring_rings}, {"S", m.semigroup_ring_bases}}},
            {"matrix_bn", {{"A", m.matrix_bn_rings}, {"n", m.matrix_bn_sizes}}},
            {"good_grading", m.good_gradings},
            {"groupoid_ring", {{"A", m.groupoid_ring_rings}, {"G", m.groupoid_ring_bases}}},
            {"zero_product", {{"A", m.zero_product_rings}, {"base", m.zero_product_bases}}},
            {"mutations", {{"sources", m.mutation_sources}, {"per_source", m.mutations_per_source}}},
            {"extra", m.extra_graded}}},
          {"notes",
           {"The semigroup-ring suite pairs every corpus ring with every corpus semigroup; "
            "finite semigroups always have an idempotent, so E(S) is never empty.",
            "No finite ring is nearly epsilon-strongly graded without being epsilon-strongly "
            "graded, so that verdict cell stays empty."}}};
}

CorpusManifest manifest_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("manifest must be an object");
  CorpusManifest m;
  try {
    if (j.contains("seed")) {
      if (!j.at("seed").is_number_unsigned()) throw ParseError("seed must be a non-negative integer");
      m.seed = j.at("seed").get<std::uint64_t>();
    }
    const json& sg = section(j, "semigroups");
    m.exhaustive_max_order = size_or(sg, "exhaustive_max_order", 0);
    if (m.exhaustive_max_order > 3) throw ParseError("exhaustive enumeration is limited to order 3");
    const json& sampled = section(sg, "sampled");
    m.sampled_order = size_or(sampled, "order", 0);
    m.sampled_count = size_or(sampled, "count", 0);
    m.semigroups = list_of(sg, "named");
    m.rings = list_of(j, "rings");
    m.groupoids = list_of(j, "groupoids");
    const json& g = section(j, "graded");
    m.semigroup_ring_rings = list_of(section(g, "semigroup_ring"), "A");
    m.semigroup_ring_bases = list_of(section(g, "semigroup_ring"), "S");
    m.matrix_bn_rings = list_of(section(g, "matrix_bn"), "A");
    for (const auto& n : list_of(section(g, "matrix_bn"), "n")) {
      if (!n.is_number_unsigned()) throw ParseError("matrix_bn sizes must be counts");
      m.matrix_bn_sizes.push_back(n.get<std::size_t>());
    }
    m.good_gradings = list_of(g, "good_grading");
    m.groupoid_ring_rings = list_of(section(g, "groupoid_ring"), "A");
    m.groupoid_ring_bases = list_of(section(g, "groupoid_ring"), "G");
    m.zero_product_rings = list_of(section(g, "zero_product"), "A");
    m.zero_product_bases = list_of(section(g, "zero_product"), "base");
    m.mutation_sources = list_of(section(g, "mutations"), "sources");
    m.mutations_per_source = size_or(section(g, "mutations"), "per_source", 0);
    m.extra_graded = list_of(g, "extra");
  } catch (const json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  return m;
}

Corpus generate_corpus(const CorpusManifest& m, const std::filesystem::path& dir) {
  Corpus c;
  for (std::size_t order = 1; order <= m.exhaustive_max_order; ++order) {
    std::uint64_t raw = 0;
    auto all = all_semigroups(order, &raw);
    c.log["exhaustive"][std::to_string(order)] = {{"raw", raw}, {"associative", all.size()}};
    for (std::size_t i = 0; i < all.size(); ++i) {
      c.semigroups.push_back({"order" + std::to_string(order) + "#" + std::to_string(i),
                              std::move(all[i])});
    }
  }
  if (m.sampled_count > 0) {
    std::uint64_t attempts = 0;
    auto sampled = sample_semigroups(m.sampled_order, m.sampled_count, m.seed, &attempts);
    c.log["sampled"] = {{"order", m.sampled_order}, {"count", sampled.size()}, {"attempts", attempts}};
    for (std::size_t i = 0; i < sampled.size(); ++i) {
      c.semigroups.push_back({"sampled" + std::to_string(m.sampled_order) + "#" + std::to_string(i),
                              std::move(sampled[i])});
    }
  }
  for (const auto& spec : m.semigroups) {
    const std::string id = spec_id(spec);
    c.semigroups.push_back({id, build_entry(id, [&] { return semigroup_from_json(spec, dir); })});
  }
  for (const auto& spec : m.rings) {
    const std::string id = spec_id(spec);
    c.rings.push_back({id, build_entry(id, [&] { return ring_from_json(spec, dir); })});
  }
  for (const auto& spec : m.groupoids) {
    const std::string id = spec_id(spec);
    c.groupoids.push_back({id, build_entry(id, [&] { return groupoid_from_json(spec, dir); })});
  }

  auto add_graded = [&](const std::string& id, const json& spec) {
    c.graded.push_back({id, build_entry(id, [&] { return graded_from_json(spec, dir); })});
  };
  for (const auto& a : m.semigroup_ring_rings) {
    for (const auto& s : m.semigroup_ring_bases) {
      add_graded("semigroup_ring(" + spec_id(a) + "," + spec_id(s) + ")",
                 {{"construct", "semigroup_ring"}, {"A", a}, {"S", s}});
    }
  }
  for (const auto& a : m.matrix_bn_rings) {
    for (std::size_t n : m.matrix_bn_sizes) {
      add_graded("matrix_bn(" + spec_id(a) + "," + std::to_string(n) + ")",
                 {{"construct", "matrix_bn"}, {"A", a}, {"n", n}});
    }
  }
  for (const auto& g : m.good_gradings) {
    const std::string id = "good_grading(" + spec_id(g.value("A", json())) + "," +
                           spec_id(g.value("S", json())) + "," + g.value("deg", json()).dump() + ")";
    GoodGradingEntry entry = build_entry(id, [&] {
      FiniteRing a = ring_from_json(g.at("A"), dir);
      FiniteSemigroup base = semigroup_from_json(g.at("S"), dir);
      std::vector<std::vector<Element>> rows = g.at("deg").get<std::vector<std::vector<Element>>>();
      DegreeMap deg = validate_degree_map(base, rows);
      return GoodGradingEntry{std::move(a), std::move(base), std::move(deg)};
    });
    c.graded.push_back({id, build_entry(id, [&] { return good_grading(entry.a, entry.base, entry.deg); })});
    c.good_gradings.push_back({id, std::move(entry)});
  }
  for (const auto& a : m.groupoid_ring_rings) {
    for (const auto& g : m.groupoid_ring_bases) {
      add_graded("groupoid_ring(" + spec_id(a) + "," + spec_id(g) + ")",
                 {{"construct", "groupoid_ring"}, {"A", a}, {"G", g}});
    }
  }
  for (const auto& a : m.zero_product_rings) {
    for (const auto& b : m.zero_product_bases) {
      add_graded("zero_product(" + spec_id(a) + "," + spec_id(b) + ")",
                 {{"construct", "zero_product"}, {"A", a}, {"base", b}});
    }
  }
  for (const auto& spec : m.mutation_sources) {
    const std::string source_id = spec_id(spec);
    const GradedRing source = build_entry(source_id, [&] { return graded_from_json(spec, dir); });
    std::size_t kept = 0;
    for (auto [s, t] : source.product_pairs()) {
      if (kept == m.mutations_per_source) break;
      RawGrading raw = to_raw(source);
      raw.products.erase({s, t});
      try {
        GradedRing mutated = validate_grading(std::move(raw));
        c.graded.push_back({"mutation(" + source_id + ",drop " + std::to_string(s) + "*" +
                                std::to_string(t) + ")",
                            std::move(mutated)});
        ++kept;
      } catch (const ValidationError&) {
        // Dropping this table breaks associativity; try the next one.
      }
    }
  }
  for (const auto& spec : m.extra_graded) add_graded(spec_id(spec), spec);

  c.log["counts"] = {{"semigroups", c.semigroups.size()},
                     {"rings", c.rings.size()},
                     {"groupoids", c.groupoids.size()},
                     {"graded", c.graded.size()},
                     {"good_gradings", c.good_gradings.size()}};
  return c;
}

std::vector<std::pair<std::string, json>> corpus_files(const Corpus& c) {
  std::vector<std::pair<std::string, json>> out;
  json index = json::object();
  auto emit = [&](const char* prefix, std::size_t i, const std::string& id, json body) {
    char name[64];
    std::snprintf(name, sizeof name, "%s_%04zu.json", prefix, i);
    index[name] = id;
    out.emplace_back(name, std::move(body));
  };
  for (std::size_t i = 0; i < c.semigroups.size(); ++i) {
    emit("semigroup", i, c.semigroups[i].id, to_json(c.semigroups[i].value));
  }
  for (std::size_t i = 0; i < c.rings.size(); ++i) emit("ring", i, c.rings[i].id, to_json(c.rings[i].value));
  for (std::size_t i = 0; i < c.groupoids.size(); ++i) {
    emit("groupoid", i, c.groupoids[i].id, to_json(c.groupoids[i].value));
  }
  for (std::size_t i = 0; i < c.graded.size(); ++i) {
    emit("graded_ring", i, c.graded[i].id, to_json(c.graded[i].value));
  }
  out.emplace_back("index.json", json{{"files", index}, {"log", c.log}});
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "q-vs-v",        "vnr-char",  "tominaga", "main",     "lemma-technical", "eps-char",
      "semigroup-ring", "good-grading", "inverse", "corollaries", "switch",     "groupoid"};
  return names;
}

namespace {

using Task = std::pair<std::string, std::function<CheckReport()>>;

CheckReport groupoid_semigroup_report(const FiniteGroupoid& g) {
  CheckReport rep;
  rep.check = "groupoid-semigroup";
  const GroupoidSemigroup sg = to_inverse_semigroup(g);
  const auto c = classify_semigroup(sg.semigroup);
  bool embedded = true;
  for (Element x = 0; x < g.num_morphisms(); ++x) {
    for (Element y = 0; y < g.num_morphisms(); ++y) {
      const Element xy = sg.semigroup.product(sg.embedding[x], sg.embedding[y]);
      const auto gxy = g.compose(x, y);
      embedded = embedded && (gxy ? xy == sg.embedding[*gxy] : xy == 0);
    }
  }
  rep.add("inverse", c.is_inverse);
  rep.add("composition_preserved", embedded);
  rep.agreement = c.is_inverse && embedded;
  rep.details = {{"order", sg.semigroup.order()}, {"idempotents", c.idempotents}};
  return rep;
}

std::vector<Task> suite_tasks(const Corpus& c, const std::string& suite, const RunOptions& opts) {
  std::vector<Task> tasks;
  auto over_graded = [&](CheckReport (*check)(const GradedRing&)) {
    for (const auto& e : c.graded) {
      tasks.emplace_back(e.id, [&e, check] { return check(e.value); });
    }
  };
  if (suite == "q-vs-v") {
    for (const auto& e : c.semigroups) tasks.emplace_back(e.id, [&e] { return check_q_vs_v(e.value); });
  } else if (suite == "vnr-char") {
    const std::size_t k = opts.fg_ideal_bound;
    for (const auto& e : c.rings) {
      tasks.emplace_back(e.id, [&e, k] { return check_vnr_characterization_report(e.value, k); });
    }
  } else if (suite == "tominaga") {
    for (const auto& e : c.rings) tasks.emplace_back(e.id, [&e] { return check_tominaga(e.value); });
  } else if (suite == "main") {
    over_graded(check_theorem_main);
  } else if (suite == "lemma-technical") {
    over_graded(check_lemma_technical);
  } else if (suite == "eps-char") {
    over_graded(check_eps_characterizations);
  } else if (suite == "inverse") {
    over_graded(check_theorem_inverse_semigroup);
  } else if (suite == "corollaries") {
    over_graded(check_corollaries);
  } else if (suite == "switch") {
    over_graded(check_prop_switch);
  } else if (suite == "groupoid") {
    for (const auto& e : c.groupoids) {
      tasks.emplace_back(e.id, [&e] { return groupoid_semigroup_report(e.value); });
    }
    over_graded(check_theorem_groupoid);
  } else if (suite == "semigroup-ring") {
    for (const auto& a : c.rings) {
      for (const auto& s : c.semigroups) {
        tasks.emplace_back(a.id + "[" + s.id + "]",
                           [&a, &s] { return check_semigroup_ring_prop(a.value, s.value); });
      }
    }
  } else if (suite == "good-grading") {
    for (const auto& e : c.good_gradings) {
      tasks.emplace_back(e.id, [&e] {
        return check_good_grading_prop(e.value.a, e.value.base, e.value.deg);
      });
    }
  } else {
    throw Error("unknown suite '" + suite + "'");
  }
  return tasks;
}

std::vector<json> run_tasks(const std::vector<Task>& tasks, const RunOptions& opts) {
  std::vector<json> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      json entry;
      try {
        CheckReport rep = tasks[i].second();
        rep.subject = tasks[i].first;
        entry = to_json(rep);
      } catch (const std::exception& e) {
        entry = {{"subject", tasks[i].first}, {"agreement", false}, {"applicable", true},
                 {"error", e.what()}, {"verdicts", json::object()}};
      }
      cap_witnesses(entry, opts.max_witnesses);
      results[i] = std::move(entry);
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(opts.jobs, tasks.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

json summarize(const std::string& suite, const std::vector<json>& entries) {
  std::size_t applicable = 0, skipped = 0, agreed = 0;
  json disagreements = json::array();
  json verdict_counts = json::object();
  for (const auto& e : entries) {
    if (!e.value("applicable", true)) {
      ++skipped;
      continue;
    }
    ++applicable;
    if (e.value("agreement", false)) {
      ++agreed;
    } else {
      disagreements.push_back(e.value("subject", ""));
    }
    for (auto it = e["verdicts"].begin(); it != e["verdicts"].end(); ++it) {
      json& cell = verdict_counts[it.key()];
      if (cell.is_null()) cell = {{"true", 0}, {"false", 0}, {"vacuous", 0}};
      cell[it.value().value("value", false) ? "true" : "false"] =
          cell[it.value().value("value", false) ? "true" : "false"].get<std::size_t>() + 1;
      if (it.value().value("vacuous", false)) cell["vacuous"] = cell["vacuous"].get<std::size_t>() + 1;
    }
  }
  return {{"suite", suite},
          {"entries", entries.size()},
          {"applicable", applicable},
          {"skipped", skipped},
          {"agreements", agreed},
          {"disagreements", disagreements},
          {"verdict_counts", verdict_counts}};
}

}  // namespace

SuiteResult run_suite(const Corpus& c, const std::string& suite, const RunOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult result;
  if (suite == "all") {
    json suites = json::object();
    json seconds = json::object();
    std::size_t disagreements = 0;
    for (const auto& name : suite_names()) {
      SuiteResult one = run_suite(c, name, opts);
      seconds[name] = one.summary["timings"]["seconds"];
      disagreements += one.summary["disagreements"].size();
      suites[name] = strip_timings(one.summary);
      result.agreement = result.agreement && one.agreement;
      for (auto& e : one.entries) {
        e["suite"] = name;
        result.entries.push_back(std::move(e));
      }
    }
    result.summary = {{"suite", "all"}, {"suites", suites}, {"disagreement_count", disagreements}};
    result.summary["timings"] = {{"per_suite_seconds", seconds}};
  } else {
    result.entries = run_tasks(suite_tasks(c, suite, opts), opts);
    result.summary = summarize(suite, result.entries);
    result.agreement = result.summary["disagreements"].empty();
    result.summary["timings"] = json::object();
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  result.summary["timings"]["seconds"] = elapsed.count();
  return result;
}

json strip_timings(const json& summary) {
  json out = summary;
  out.erase("timings");
  return out;
}

}  // namespace grl
