#pragma once

// The structure corpus: a manifest describes which semigroups, rings,
// groupoids and graded rings to build; generation is deterministic in the
// manifest (including its seed), and every suite runs over the result.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "grl/io.hpp"
#include "grl/report.hpp"

namespace grl {

struct CorpusManifest {
  std::uint64_t seed = 0;
  std::size_t exhaustive_max_order = 0;  // all associative tables up to this order
  std::size_t sampled_order = 0;
  std::size_t sampled_count = 0;
  std::vector<json> semigroups;  // named or inline specs
  std::vector<json> rings;
  std::vector<json> groupoids;

  // Construction products: every A in `*_rings` with every base listed.
  std::vector<json> semigroup_ring_rings, semigroup_ring_bases;
  std::vector<json> matrix_bn_rings;
  std::vector<std::size_t> matrix_bn_sizes;
  std::vector<json> good_gradings;  // {"A", "S", "deg"}
  std::vector<json> groupoid_ring_rings, groupoid_ring_bases;
  std::vector<json> zero_product_rings, zero_product_bases;  // bases: semigroup or groupoid specs
  std::vector<json> mutation_sources;  // graded specs; one product table dropped at a time
  std::size_t mutations_per_source = 0;
  std::vector<json> extra_graded;
};

/// The manifest shipped as corpus/manifest.json.
CorpusManifest default_manifest();
json to_json(const CorpusManifest& m);
/// Missing sections are empty, so `{}` is the empty manifest.
CorpusManifest manifest_from_json(const json& j);

template <class T>
struct CorpusEntry {
  std::string id;
  T value;
};

struct GoodGradingEntry {
  FiniteRing a;
  FiniteSemigroup base;
  DegreeMap deg;
};

struct Corpus {
  std::vector<CorpusEntry<FiniteSemigroup>> semigroups;
  std::vector<CorpusEntry<FiniteRing>> rings;
  std::vector<CorpusEntry<FiniteGroupoid>> groupoids;
  std::vector<CorpusEntry<GradedRing>> graded;
  std::vector<CorpusEntry<GoodGradingEntry>> good_gradings;
  json log = json::object();  // generation counts
};

/// Throws ValidationError naming the failing entry id.
Corpus generate_corpus(const CorpusManifest& m, const std::filesystem::path& dir = {});

/// The structure files of a corpus, keyed by relative file name.
std::vector<std::pair<std::string, json>> corpus_files(const Corpus& c);

struct RunOptions {
  std::size_t jobs = 1;
  std::size_t fg_ideal_bound = 2;
  std::size_t max_witnesses = 100;
};

struct SuiteResult {
  json summary;               // deterministic apart from "timings"
  std::vector<json> entries;  // per-entry reports, corpus order
  bool agreement = true;
};

const std::vector<std::string>& suite_names();

/// Runs one suite ("all" runs every suite in turn). Throws Error for an
/// unknown suite name.
SuiteResult run_suite(const Corpus& c, const std::string& suite, const RunOptions& opts = {});

/// Copy of `summary` without its "timings" field.
json strip_timings(const json& summary);

}  // namespace grl
