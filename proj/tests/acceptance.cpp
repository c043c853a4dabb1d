// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "grl/cli.hpp"
#include "grl/constructions.hpp"
#include "grl/corpus.hpp"
#include "grl/error.hpp"
#include "grl/grading_properties.hpp"
#include "grl/theorem_checks.hpp"

using namespace grl;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

bool verdict(const CheckReport& rep, const std::string& name) {
  const Verdict* v = rep.find(name);
  return v != nullptr && v->value;
}

const Corpus& corpus() {
  static const Corpus c = generate_corpus(default_manifest());
  return c;
}

void suite_clean(Outcome& o, const std::string& suite, std::size_t min_applicable = 1) {
  const auto r = run_suite(corpus(), suite);
  const std::size_t applicable = r.summary["applicable"];
  o.require(r.agreement && r.summary["disagreements"].empty(),
            suite + " disagreements: " + r.summary["disagreements"].dump());
  o.require(applicable >= min_applicable, suite + " applicable " + std::to_string(applicable));
  if (o.detail.empty()) o.detail = suite + " applicable " + std::to_string(applicable);
}

Outcome criterion_q_vs_v() {
  Outcome o;
  std::size_t tables = 0, disagreements = 0;
  std::uint64_t raw3 = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::uint64_t raw = 0;
    for (const auto& s : all_semigroups(n, &raw)) {
      ++tables;
      if (!check_q_vs_v(s).agreement) ++disagreements;
    }
    if (n == 3) raw3 = raw;
  }
  o.require(raw3 == 19683, "raw order-3 tables " + std::to_string(raw3));
  o.require(tables == 1 + 8 + 113, "associative tables " + std::to_string(tables));
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  if (o.pass) o.detail = std::to_string(tables) + " tables, 0 exceptions";
  return o;
}

Outcome criterion_vnr() {
  Outcome o;
  const std::vector<std::pair<std::string, FiniteRing>> rings = {
      {"Z2", integers_mod(2)}, {"Z3", integers_mod(3)}, {"Z4", integers_mod(4)},
      {"Z6", integers_mod(6)}, {"Z8", integers_mod(8)}, {"Z9", integers_mod(9)},
      {"F4", field_f4()},      {"Z2xZ2", product_ring(integers_mod(2), integers_mod(2))}};
  for (const auto& [name, r] : rings) {
    const auto c = check_vnr_characterization(r, 2);
    o.require(c.precondition_met, name + " not s-unital");
    o.require(c.agreement(), name + " disagrees");
  }
  const auto z4 = check_vnr_characterization(integers_mod(4), 2);
  o.require(!z4.von_neumann_regular && z4.failing_element == Element{2}, "Z4 pin");
  o.require(check_vnr_characterization(integers_mod(6), 2).von_neumann_regular, "Z6 pin");
  o.require(check_vnr_characterization(field_f4(), 2).von_neumann_regular, "F4 pin");
  if (o.pass) o.detail = "8 rings agree; Z4 fails at 2, Z6 and F4 regular";
  return o;
}

Outcome criterion_tominaga() {
  Outcome o;
  std::size_t subsets = 0;
  for (const auto& e : corpus().rings) {
    const FiniteRing& r = e.value;
    for (Side side : {Side::left, Side::right}) {
      if (!one_sided_s_unital(r, side).holds) continue;
      const std::size_t n = r.order();
      for (Element a = 0; a < n; ++a)
        for (Element b = a; b < n; ++b)
          for (Element c = b; c < n; ++c) {
            const Element v[] = {a, b, c};
            ++subsets;
            const auto u = common_unit(r, v, side);
            bool ok = u.has_value();
            for (Element x : v) {
              if (ok) ok = (side == Side::left ? r.mul(*u, x) : r.mul(x, *u)) == x;
            }
            o.require(ok, e.id + " subset {" + std::to_string(a) + "," + std::to_string(b) + "," +
                              std::to_string(c) + "}");
          }
    }
  }
  if (o.pass) o.detail = std::to_string(subsets) + " subsets, 0 exceptions";
  return o;
}

Outcome criterion_main() {
  Outcome o;
  const auto r = run_suite(corpus(), "main");
  const std::size_t applicable = r.summary["applicable"];
  const auto& counts = r.summary["verdict_counts"]["graded_vnr"];
  o.require(r.agreement, "disagreements: " + r.summary["disagreements"].dump());
  o.require(applicable >= 30, "only " + std::to_string(applicable) + " semigroup gradings");
  o.require(counts.value("true", 0) > 0 && counts.value("false", 0) > 0, "verdicts not spanned");
  auto pin = [&](const std::string& name, const GradedRing& g, bool expected) {
    const auto rep = check_theorem_main(g);
    o.require(rep.applicable && rep.agreement && verdict(rep, "graded_vnr") == expected &&
                  verdict(rep, "rhs") == expected,
              name + " pin");
  };
  pin("M3(Z2)", matrix_bn_grading(integers_mod(2), 3), true);
  pin("M3(Z4)", matrix_bn_grading(integers_mod(4), 3), false);
  pin("Z6[SL2]", semigroup_ring(integers_mod(6), chain_semilattice(2)), true);
  pin("Z4[SL2]", semigroup_ring(integers_mod(4), chain_semilattice(2)), false);
  if (o.pass) {
    o.detail = std::to_string(applicable) + " gradings (" + std::to_string(counts.value("true", 0)) +
               " true, " + std::to_string(counts.value("false", 0)) + " false), pins hold";
  }
  return o;
}

Outcome criterion_lemma() {
  Outcome o;
  suite_clean(o, "lemma-technical");
  return o;
}

Outcome criterion_eps() {
  Outcome o;
  suite_clean(o, "eps-char");
  return o;
}

Outcome criterion_semigroup_ring() {
  Outcome o;
  suite_clean(o, "semigroup-ring");
  return o;
}

Outcome criterion_matrix() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& e : corpus().rings) {
    if (!unity(e.value)) continue;
    for (std::size_t n = 1; n <= 3; ++n) {
      ++checked;
      o.require(is_epsilon_strong(matrix_bn_grading(e.value, n)).holds,
                "M" + std::to_string(n) + "(" + e.id + ") not epsilon-strong");
    }
  }
  o.require(is_epsilon_strong(matrix_bn_grading(integers_mod(2), 3)).holds, "B3 pin");
  const auto z2 = cyclic_group(2);
  const auto deg = validate_degree_map(z2, {{0, 1}, {1, 0}});
  const auto good2 = check_good_grading_prop(integers_mod(2), z2, deg);
  const auto good4 = check_good_grading_prop(integers_mod(4), z2, deg);
  o.require(good2.applicable && good2.agreement && verdict(good2, "graded_vnr"), "Z2 good grading pin");
  o.require(good4.applicable && good4.agreement && !verdict(good4, "graded_vnr"), "Z4 good grading pin");
  bool rejected = false;
  try {
    validate_degree_map(cyclic_group(3), {{0, 1}, {1, 0}});
  } catch (const ValidationError& e) {
    rejected = e.kind() == "OppositeDegreeViolation";
  }
  o.require(rejected, "opposite-degree violation accepted");
  if (o.pass) o.detail = std::to_string(checked) + " unital matrix gradings, good-grading pins hold";
  return o;
}

Outcome criterion_groupoid() {
  Outcome o;
  for (const auto& e : corpus().groupoids) {
    o.require(classify_semigroup(to_inverse_semigroup(e.value).semigroup).is_inverse,
              "S(" + e.id + ") not inverse");
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    o.require(to_inverse_semigroup(pair_groupoid(n)).semigroup == matrix_units_semigroup(n),
              "S(pair" + std::to_string(n) + ") != B" + std::to_string(n));
  }
  Outcome sw, th;
  suite_clean(sw, "switch");
  suite_clean(th, "groupoid");
  o.require(sw.pass, sw.detail);
  o.require(th.pass, th.detail);
  const auto m2z4 = check_theorem_groupoid(groupoid_ring(integers_mod(4), pair_groupoid(2)));
  o.require(m2z4.agreement && !verdict(m2z4, "homogeneous_in_rRr"), "M2(Z4) pin");
  if (o.pass) {
    o.detail = std::to_string(corpus().groupoids.size()) + " groupoids; " + sw.detail + "; " + th.detail;
  }
  return o;
}

Outcome criterion_determinism() {
  Outcome o;
  auto run = [] {
    const char* argv[] = {"grl", "corpus", "run", "--suite", "all"};
    std::ostringstream out, err;
    const int code = run_cli(5, argv, out, err);
    return std::pair{code, json::parse(out.str())};
  };
  const auto [c1, s1] = run();
  const auto [c2, s2] = run();
  o.require(c1 == kExitOk && c2 == kExitOk, "corpus run exit codes " + std::to_string(c1) + "/" +
                                                std::to_string(c2));
  o.require(strip_timings(s1) == strip_timings(s2), "summaries differ");
  if (o.pass) o.detail = "two runs, identical summaries";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 = no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Q-vs-V equivalence on all tables of order <= 3", 10, criterion_q_vs_v},
      {2, "regularity three-way agreement", 5, criterion_vnr},
      {3, "common units on one-sided s-unital rings", 30, criterion_tominaga},
      {4, "graded regularity characterization", 60, criterion_main},
      {5, "idempotent generators for every triple", 60, criterion_lemma},
      {6, "epsilon-strong definition vs witnesses", 0, criterion_eps},
      {7, "semigroup rings", 0, criterion_semigroup_ring},
      {8, "matrix and good gradings", 0, criterion_matrix},
      {9, "groupoid gradings", 0, criterion_groupoid},
      {10, "determinism", 0, criterion_determinism},
  };
  const auto t0 = std::chrono::steady_clock::now();
  corpus();
  const std::chrono::duration<double> gen = std::chrono::steady_clock::now() - t0;
  std::printf("corpus generated in %.2f s\n", gen.count());
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    if (c.limit_seconds > 0 && dt.count() > c.limit_seconds) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(int(c.limit_seconds)) + " s limit)";
    }
    all = all && o.pass;
    std::printf("criterion %2d %s: %s [%.2f s] %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, dt.count(),
                o.detail.c_str());
  }
  std::printf("%s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
