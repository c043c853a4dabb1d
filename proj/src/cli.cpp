#include "grl/cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "grl/corpus.hpp"
#include "grl/error.hpp"
#include "grl/io.hpp"
#include "grl/theorem_checks.hpp"

#ifndef GRL_VERSION
#define GRL_VERSION "dev"
#endif

namespace grl {

namespace fs = std::filesystem;

namespace {

struct Options {
  bool pretty = false;
  std::size_t max_witnesses = 100;
  std::size_t fg_ideal_bound = 2;
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 1;
};

// Indented "key: value" rendering for --pretty.
void render_text(std::ostream& os, const json& j, int depth) {
  const std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const json& v = it.value();
      if (v.is_primitive() || (v.is_array() && !v.empty() && v.front().is_primitive()) || v.empty()) {
        os << pad << it.key() << ": " << v.dump() << '\n';
      } else {
        os << pad << it.key() << ":\n";
        render_text(os, v, depth + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive()) {
        os << pad << "- " << v.dump() << '\n';
      } else {
        os << pad << "-\n";
        render_text(os, v, depth + 1);
      }
    }
  } else {
    os << pad << j.dump() << '\n';
  }
}

void emit(std::ostream& out, const json& j, const Options& opts) {
  if (opts.pretty) {
    render_text(out, j, 0);
  } else {
    out << dump_json(j);
  }
}

json error_json(const std::exception& e) {
  json out = {{"valid", false}, {"message", e.what()}};
  if (const auto* v = dynamic_cast<const ValidationError*>(&e)) {
    out["error"] = v->kind();
    out["witness"] = v->witness();
  } else if (dynamic_cast<const ParseError*>(&e)) {
    out["error"] = "Parse";
  } else {
    out["error"] = "IO";
  }
  return out;
}

json labels_of(const FiniteSemigroup& s, const std::vector<Element>& xs) {
  json out = json::array();
  for (Element x : xs) out.push_back(s.label(x));
  return out;
}

json classify_json(const FiniteSemigroup& s) {
  const auto c = classify_semigroup(s);
  json weak = json::object(), inv = json::object();
  for (Element x = 0; x < s.order(); ++x) {
    weak[s.label(x)] = labels_of(s, c.weak_inverse_sets[x]);
    inv[s.label(x)] = labels_of(s, c.inverse_sets[x]);
  }
  return {{"kind", "semigroup"},
          {"order", s.order()},
          {"regular", c.is_regular},
          {"inverse", c.is_inverse},
          {"group", c.is_group},
          {"identity", c.identity ? json(s.label(*c.identity)) : json(nullptr)},
          {"E", labels_of(s, c.idempotents)},
          {"Q", weak},
          {"V", inv}};
}

json classify_json(const FiniteGroupoid& g) {
  const auto sg = to_inverse_semigroup(g);
  const auto c = classify_semigroup(sg.semigroup);
  json identities = json::array();
  for (Element o = 0; o < g.num_objects(); ++o) identities.push_back(g.identity(o));
  return {{"kind", "groupoid"},
          {"objects", g.num_objects()},
          {"morphisms", g.num_morphisms()},
          {"identities", identities},
          {"inverse_semigroup", {{"order", sg.semigroup.order()}, {"inverse", c.is_inverse}}}};
}

json classify_json(const FiniteRing& r) {
  auto opt = [](const std::optional<Element>& v) { return v ? json(*v) : json(nullptr); };
  const auto vnr = is_von_neumann_regular(r);
  const bool left = is_left_s_unital(r).holds, right = is_right_s_unital(r).holds;
  return {{"kind", "ring"},
          {"order", r.order()},
          {"left_s_unital", left},
          {"right_s_unital", right},
          {"s_unital", left && right},
          {"unital", unity(r).has_value()},
          {"unity", opt(unity(r))},
          {"left_unity", opt(left_unity(r))},
          {"right_unity", opt(right_unity(r))},
          {"vnr", vnr.holds},
          {"failing", opt(vnr.failing)},
          {"regularity", witness_json(vnr)}};
}

json classify_json(const GradedRing& r) {
  json out = classify_graded(r);
  out["kind"] = "graded_ring";
  return out;
}

const std::map<std::string, std::string>& theorem_inputs() {
  static const std::map<std::string, std::string> m = {
      {"q-vs-v", "semigroup"},        {"vnr-char", "ring"},          {"tominaga", "ring"},
      {"main", "graded_ring"},        {"inverse", "graded_ring"},    {"groupoid", "graded_ring"},
      {"switch", "graded_ring"},      {"lemma-technical", "graded_ring"},
      {"eps-char", "graded_ring"},    {"corollaries", "graded_ring"},
      {"good-grading", "construct"},  {"semigroup-ring", "construct"}};
  return m;
}

CheckReport run_check(const std::string& theorem, const fs::path& path, const Options& opts) {
  const std::string need = theorem_inputs().at(theorem);
  if (need == "construct") {
    const json spec = read_json_file(path);
    const std::string want = theorem == "good-grading" ? "good_grading" : "semigroup_ring";
    if (!spec.is_object() || spec.value("construct", "") != want) {
      throw ParseError("check " + theorem + " needs a {\"construct\": \"" + want + "\"} spec");
    }
    try {
      const FiniteRing a = ring_from_json(spec.at("A"), path.parent_path());
      const FiniteSemigroup s = semigroup_from_json(spec.at("S"), path.parent_path());
      if (theorem == "semigroup-ring") return check_semigroup_ring_prop(a, s);
      if (!spec.contains("deg")) throw ParseError("missing field 'deg'");
      const auto rows = spec.at("deg").get<std::vector<std::vector<Element>>>();
      return check_good_grading_prop(a, s, validate_degree_map(s, rows));
    } catch (const json::exception& e) {
      throw ParseError(e.what());
    }
  }
  const Structure st = load_structure(path);
  if (structure_kind(st) != need) {
    throw ParseError("check " + theorem + " needs a " + need + ", got a " + structure_kind(st));
  }
  if (theorem == "q-vs-v") return check_q_vs_v(std::get<FiniteSemigroup>(st));
  if (theorem == "vnr-char") {
    return check_vnr_characterization_report(std::get<FiniteRing>(st), opts.fg_ideal_bound);
  }
  if (theorem == "tominaga") return check_tominaga(std::get<FiniteRing>(st));
  const GradedRing& r = std::get<GradedRing>(st);
  if (theorem == "main") return check_theorem_main(r);
  if (theorem == "inverse") return check_theorem_inverse_semigroup(r);
  if (theorem == "groupoid") return check_theorem_groupoid(r);
  if (theorem == "switch") return check_prop_switch(r);
  if (theorem == "lemma-technical") return check_lemma_technical(r);
  if (theorem == "eps-char") return check_eps_characterizations(r);
  return check_corollaries(r);
}

void write_file_atomically(const fs::path& path, const std::string& text) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw Error("cannot write '" + tmp.string() + "'");
    os << text;
  }
  fs::rename(tmp, path);
}

CorpusManifest load_manifest(const std::string& path, const Options& opts, fs::path& dir) {
  CorpusManifest m = default_manifest();
  if (!path.empty()) {
    m = manifest_from_json(read_json_file(path));
    dir = fs::path(path).parent_path();
  }
  if (opts.seed) m.seed = *opts.seed;
  return m;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks regularity properties of finite semigroup- and groupoid-graded rings", "grl"};
  app.set_version_flag("--version", GRL_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  std::uint64_t seed = 0;
  app.add_flag("--pretty", opts.pretty, "Human-readable text instead of JSON")->envname("GRL_PRETTY");
  app.add_option("--max-witnesses", opts.max_witnesses, "Cap on inlined witness lists")
      ->envname("GRL_MAX_WITNESSES");
  app.add_option("--fg-ideal-bound", opts.fg_ideal_bound,
                 "Generator bound for finitely generated ideals")
      ->envname("GRL_FG_IDEAL_BOUND")
      ->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "Seed for sampled corpus entries")->envname("GRL_SEED");
  app.add_option("--jobs", opts.jobs, "Worker threads for corpus runs")
      ->envname("GRL_JOBS")
      ->check(CLI::PositiveNumber);

  std::string path, theorem, spec_path, out_path, manifest_path, suite = "all", out_dir;

  auto* validate = app.add_subcommand("validate", "Validate a structure file");
  validate->add_option("path", path, "Structure file")->required();

  auto* classify = app.add_subcommand("classify", "Report every applicable verdict");
  classify->add_option("path", path, "Structure file")->required();

  auto* check = app.add_subcommand("check", "Cross-check one characterization on a structure");
  std::vector<std::string> theorems;
  for (const auto& [name, kind] : theorem_inputs()) theorems.push_back(name);
  check->add_option("theorem", theorem, "Check name")->required()->check(CLI::IsMember(theorems));
  check->add_option("path", path, "Structure file or construction spec")->required();

  auto* construct = app.add_subcommand("construct", "Build a graded ring from a construction spec");
  construct->add_option("spec", spec_path, "Construction spec")->required();
  construct->add_option("-o,--out", out_path, "Output file (stdout when omitted)");

  auto* corpus = app.add_subcommand("corpus", "Corpus generation and suite runs");
  corpus->require_subcommand(1);
  auto* corpus_run = corpus->add_subcommand("run", "Run a suite over the corpus");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  corpus_run->add_option("--manifest", manifest_path, "Manifest file (built-in default when omitted)");
  corpus_run->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suites));
  corpus_run->add_option("--out", out_dir, "Directory for per-entry reports");
  auto* corpus_generate = corpus->add_subcommand("generate", "Write the corpus structure files");
  corpus_generate->add_option("--manifest", manifest_path, "Manifest file");
  corpus_generate->add_option("--out", out_dir, "Output directory")->required();
  auto* corpus_manifest = corpus->add_subcommand("manifest", "Print the default manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  if (*seed_opt) opts.seed = seed;

  try {
    if (*validate) {
      const Structure s = load_structure(path);
      json report = {{"valid", true}, {"kind", structure_kind(s)}};
      emit(out, report, opts);
      return kExitOk;
    }
    if (*classify) {
      const Structure s = load_structure(path);
      json report = std::visit([](const auto& x) { return classify_json(x); }, s);
      report["subject"] = path;
      report["version"] = GRL_VERSION;
      cap_witnesses(report, opts.max_witnesses);
      emit(out, report, opts);
      return kExitOk;
    }
    if (*check) {
      const auto start = std::chrono::steady_clock::now();
      CheckReport rep = run_check(theorem, path, opts);
      rep.subject = path;
      json report = to_json(rep);
      cap_witnesses(report, opts.max_witnesses);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      report["version"] = GRL_VERSION;
      report["timings"] = {{"seconds", elapsed.count()}};
      if (!rep.applicable) report["status"] = "skipped";
      emit(out, report, opts);
      return !rep.applicable || rep.agreement ? kExitOk : kExitDisagreement;
    }
    if (*construct) {
      const GradedRing r = build_construction(read_json_file(spec_path), fs::path(spec_path).parent_path());
      const std::string text = dump_json(to_json(r));
      if (out_path.empty()) {
        out << text;
      } else {
        write_file_atomically(out_path, text);
      }
      return kExitOk;
    }
    if (*corpus_manifest) {
      out << dump_json(to_json(default_manifest()));
      return kExitOk;
    }
    fs::path dir;
    const CorpusManifest m = load_manifest(manifest_path, opts, dir);
    const Corpus c = generate_corpus(m, dir);
    if (*corpus_generate) {
      fs::create_directories(out_dir);
      for (const auto& [name, body] : corpus_files(c)) {
        write_file_atomically(fs::path(out_dir) / name, dump_json(body));
      }
      emit(out, c.log, opts);
      return kExitOk;
    }
    RunOptions ro{opts.jobs, opts.fg_ideal_bound, opts.max_witnesses};
    SuiteResult result = run_suite(c, suite, ro);
    result.summary["seed"] = m.seed;
    result.summary["corpus"] = c.log;
    result.summary["version"] = GRL_VERSION;
    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      json reports = json::array();
      for (auto& e : result.entries) reports.push_back(std::move(e));
      write_file_atomically(fs::path(out_dir) / "entries.json", dump_json(reports));
      write_file_atomically(fs::path(out_dir) / "summary.json", dump_json(result.summary));
    }
    emit(out, result.summary, opts);
    return result.agreement ? kExitOk : kExitDisagreement;
  } catch (const Error& e) {
    emit(err, error_json(e), opts);
    return kExitInvalid;
  } catch (const fs::filesystem_error& e) {
    emit(err, error_json(e), opts);
    return kExitInvalid;
  }
}

}  // namespace grl
