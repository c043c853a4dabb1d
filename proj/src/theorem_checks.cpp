#include "grl/theorem_checks.hpp"

#include <algorithm>

namespace grl {

namespace {

json pair_json(const std::optional<std::pair<Element, Element>>& p) {
  if (!p) return nullptr;
  return json::array({p->first, p->second});
}

template <class T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

bool is_semigroup_base(const GradedRing& r) { return r.base().semigroup() != nullptr; }

}  // namespace

json witness_json(const EpsilonWitness& w) {
  json out = json::array();
  if (w.kind == EpsilonWitness::Kind::uniform) {
    for (const auto& e : w.uniform) {
      out.push_back({{"s", e.s}, {"t", e.t}, {"eps", e.eps}, {"eps_prime", e.eps_prime}});
    }
  } else {
    for (const auto& e : w.local) {
      out.push_back(
          {{"s", e.s}, {"t", e.t}, {"r", e.r}, {"eps", e.eps}, {"eps_prime", e.eps_prime}});
    }
  }
  return out;
}

json witness_json(const GradedVnrWitness& w) {
  json triples = json::array();
  for (const auto& t : w.triples) {
    triples.push_back({{"s", t.s}, {"r", t.r}, {"t", t.t}, {"y", t.y}});
  }
  json out = {{"holds", w.holds}, {"vacuous", w.vacuous}, {"triples", triples}};
  out["failing"] = w.failing ? json{{"s", (*w.failing)[0]}, {"r", (*w.failing)[1]},
                                    {"t", (*w.failing)[2]}}
                             : json(nullptr);
  return out;
}

json witness_json(const RegularityWitness& w) {
  json pairs = json::array();
  for (auto [r, y] : w.quasi_inverse) pairs.push_back({{"r", r}, {"y", y}});
  return {{"holds", w.holds}, {"failing", opt_json(w.failing)}, {"quasi_inverses", pairs}};
}

CheckReport check_q_vs_v(const FiniteSemigroup& s) {
  CheckReport rep;
  rep.check = "q-vs-v";
  const auto c = classify_semigroup(s);
  bool all_q = true, all_v = true;
  for (Element x = 0; x < s.order(); ++x) {
    all_q = all_q && !c.weak_inverse_sets[x].empty();
    all_v = all_v && !c.inverse_sets[x].empty();
  }
  rep.add("all_weak_inverse_sets_nonempty", all_q);
  rep.add("all_inverse_sets_nonempty", all_v);
  rep.require_equal({"all_weak_inverse_sets_nonempty", "all_inverse_sets_nonempty"});

  bool symmetric = true, idempotent_products = true, nested = true;
  for (Element x = 0; x < s.order(); ++x) {
    const auto& q = c.weak_inverse_sets[x];
    for (Element y : c.inverse_sets[x]) {
      const auto& vy = c.inverse_sets[y];
      symmetric = symmetric && std::binary_search(vy.begin(), vy.end(), x);
      nested = nested && std::binary_search(q.begin(), q.end(), y);
      const Element xy = s.product(x, y), yx = s.product(y, x);
      idempotent_products =
          idempotent_products && s.product(xy, xy) == xy && s.product(yx, yx) == yx;
    }
  }
  rep.details = {{"inverse_relation_symmetric", symmetric},
                 {"inverses_are_weak_inverses", nested},
                 {"inverse_products_idempotent", idempotent_products},
                 {"is_inverse", c.is_inverse},
                 {"is_regular", c.is_regular}};
  rep.agreement = rep.agreement && symmetric && nested && idempotent_products &&
                  (!c.is_inverse || c.is_regular);
  return rep;
}

CheckReport check_vnr_characterization_report(const FiniteRing& ring, std::size_t ideal_bound) {
  CheckReport rep;
  rep.check = "vnr-char";
  const auto c = check_vnr_characterization(ring, ideal_bound);
  if (!c.precondition_met) {
    rep.skip("ring is not s-unital");
    return rep;
  }
  rep.add("von_neumann_regular", c.von_neumann_regular);
  rep.add("left_principal_idempotent_generated", c.left_principal);
  rep.add("left_finitely_generated_idempotent_generated", c.left_finitely_generated);
  rep.add("right_principal_idempotent_generated", c.right_principal);
  rep.add("right_finitely_generated_idempotent_generated", c.right_finitely_generated);
  rep.agreement = c.agreement();
  rep.details = {{"ideal_bound", c.ideal_bound},
                 {"failing_element", opt_json(c.failing_element)},
                 {"left_counterexample", opt_json(c.left_counterexample)},
                 {"right_counterexample", opt_json(c.right_counterexample)}};
  return rep;
}

CheckReport check_tominaga(const FiniteRing& ring, std::size_t max_subset) {
  CheckReport rep;
  rep.check = "tominaga";
  const std::size_t n = ring.order();
  for (Side side : {Side::left, Side::right}) {
    const std::string name = side == Side::left ? "left" : "right";
    const bool s_unital = one_sided_s_unital(ring, side).holds;
    // Subsets of size 1..max_subset, ascending; the singletons alone already
    // encode one-sided s-unitality.
    std::vector<Element> pick;
    std::optional<std::vector<Element>> counter;
    std::size_t checked = 0;
    auto visit = [&](auto&& self, Element start) -> void {
      if (counter) return;
      if (!pick.empty()) {
        ++checked;
        if (!common_unit(ring, pick, side)) {
          counter = pick;
          return;
        }
      }
      if (pick.size() == max_subset) return;
      for (Element x = start; x < n && !counter; ++x) {
        pick.push_back(x);
        self(self, x + 1);
        pick.pop_back();
      }
    };
    visit(visit, 0);
    rep.add(name + "_s_unital", s_unital);
    rep.add(name + "_common_units", !counter);
    rep.require_equal({name + "_s_unital", name + "_common_units"});
    rep.details[name] = {{"subsets_checked", checked}, {"counterexample", opt_json(counter)}};
  }
  rep.details["max_subset"] = max_subset;
  return rep;
}

namespace {

bool verify_uniform(const GradedRing& r, const EpsilonWitness& w) {
  for (const auto& e : w.uniform) {
    const Element st = *r.base().product(e.s, e.t), ts = *r.base().product(e.t, e.s);
    if (!product_subgroup(r, e.s, e.t).contains(e.eps)) return false;
    if (!product_subgroup(r, e.t, e.s).contains(e.eps_prime)) return false;
    for (Element x = 0; x < r.component(e.s).order(); ++x) {
      if (r.multiply(st, e.eps, e.s, x) != x || r.multiply(e.s, x, ts, e.eps_prime) != x) {
        return false;
      }
    }
  }
  return true;
}

bool verify_local(const GradedRing& r, const EpsilonWitness& w) {
  for (const auto& e : w.local) {
    const Element st = *r.base().product(e.s, e.t), ts = *r.base().product(e.t, e.s);
    if (r.multiply(st, e.eps, e.s, e.r) != e.r || r.multiply(e.s, e.r, ts, e.eps_prime) != e.r) {
      return false;
    }
  }
  return true;
}

}  // namespace

CheckReport check_eps_characterizations(const GradedRing& r) {
  CheckReport rep;
  rep.check = "eps-char";
  const auto eps_def = is_epsilon_strong(r);
  const auto eps_elem = epsilon_strong_by_elements(r);
  const auto near_def = is_nearly_epsilon_strong(r);
  const auto near_elem = nearly_epsilon_strong_by_elements(r);
  rep.add("epsilon_strong_definition", eps_def.holds, eps_def.vacuous);
  rep.add("epsilon_strong_elements", eps_elem.holds, eps_elem.vacuous);
  rep.add("nearly_epsilon_strong_definition", near_def.holds, near_def.vacuous);
  rep.add("nearly_epsilon_strong_elements", near_elem.holds, near_elem.vacuous);
  rep.require_equal({"epsilon_strong_definition", "epsilon_strong_elements"});
  rep.require_equal({"nearly_epsilon_strong_definition", "nearly_epsilon_strong_elements"});

  const bool witnesses_ok = verify_uniform(r, eps_def.witness) &&
                            verify_uniform(r, eps_elem.witness) &&
                            verify_local(r, near_def.witness) && verify_local(r, near_elem.witness);
  rep.agreement = rep.agreement && witnesses_ok;

  json unities = json::array();
  if (eps_def.holds) {
    bool all_unital = true;
    for (Element e : r.base().idempotents()) {
      const FiniteRing& re = r.component_ring(e);
      const auto u = subring_unity(re);
      bool verified = u.has_value();
      for (Element x = 0; verified && x < re.order(); ++x) {
        verified = re.mul(*u, x) == x && re.mul(x, *u) == x;
      }
      all_unital = all_unital && verified;
      unities.push_back({{"e", e}, {"unity", opt_json(u)}});
    }
    rep.add("idempotent_components_unital", all_unital);
    rep.agreement = rep.agreement && all_unital;
  }
  rep.details = {{"witnesses_verified", witnesses_ok},
                 {"epsilon_failing", pair_json(eps_def.failing)},
                 {"epsilon_reason", eps_def.reason},
                 {"nearly_failing", pair_json(near_def.failing)},
                 {"nearly_reason", near_def.reason},
                 {"epsilon_witness", witness_json(eps_def.witness)},
                 {"nearly_witness", witness_json(near_def.witness)},
                 {"idempotent_unities", unities}};
  return rep;
}

CheckReport check_theorem_main(const GradedRing& r) {
  CheckReport rep;
  rep.check = "main";
  if (!is_semigroup_base(r)) {
    rep.skip("base is a groupoid");
    return rep;
  }
  const auto lhs = is_graded_vnr(r);
  const auto nearly = is_nearly_epsilon_strong(r);
  const auto comps = base_components_vnr(r);
  const bool rhs = nearly.holds && comps.holds;
  rep.add("graded_vnr", lhs.holds, lhs.vacuous);
  rep.add("nearly_epsilon_strong", nearly.holds, nearly.vacuous);
  rep.add("base_components_vnr", comps.holds);
  rep.add("rhs", rhs);
  rep.require_equal({"graded_vnr", "rhs"});
  // Necessity: graded vNr implies each conjunct on its own.
  const bool necessity = !lhs.holds || (nearly.holds && comps.holds);
  rep.agreement = rep.agreement && necessity;
  rep.details = {{"necessity_holds", necessity},
                 {"graded_vnr", witness_json(lhs)},
                 {"nearly_failing", pair_json(nearly.failing)},
                 {"nearly_reason", nearly.reason},
                 {"failing_component", opt_json(comps.failing)}};
  return rep;
}

CheckReport check_lemma_technical(const GradedRing& r) {
  CheckReport rep;
  rep.check = "lemma-technical";
  const auto nearly = is_nearly_epsilon_strong(r);
  const auto comps = base_components_vnr(r);
  if (!nearly.holds || !comps.holds) {
    rep.skip(!nearly.holds ? "not nearly epsilon-strong" : "some R_e is not von Neumann regular");
    return rep;
  }
  json triples = json::array();
  bool all_found = true, all_decomposed = true, all_constructive = true;
  std::size_t count = 0;
  for (auto [s, t] : r.base().inverse_pairs()) {
    const Element ts = *r.base().product(t, s);
    const Element st = *r.base().product(s, t);
    const FiniteRing& r_ts = r.component_ring(ts);
    const Subgroup p_st = product_subgroup(r, s, t);

    // Products a*b in R_st with a source pair, deduplicated by value.
    std::vector<Element> ab_values;
    std::vector<std::pair<Element, Element>> ab_source;
    {
      std::vector<char> seen(r.component(st).order(), 0);
      for (Element a = 0; a < r.component(s).order(); ++a) {
        for (Element b = 0; b < r.component(t).order(); ++b) {
          const Element ab = r.multiply(s, a, t, b);
          if (seen[ab]) continue;
          seen[ab] = 1;
          ab_values.push_back(ab);
          ab_source.emplace_back(a, b);
        }
      }
    }

    for (Element x = 0; x < r.component(s).order(); ++x) {
      ++count;
      std::vector<Element> seeds;
      for (Element b = 0; b < r.component(t).order(); ++b) seeds.push_back(r.multiply(t, b, s, x));
      const Subgroup ideal = additive_closure(r.component(ts), seeds);
      json entry = {{"s", s}, {"t", t}, {"r", x}, {"ideal_size", ideal.size()}};

      std::optional<Element> u;
      if (is_left_ideal(r_ts, ideal)) u = idempotent_generator(r_ts, ideal);
      entry["u"] = opt_json(u);
      all_found = all_found && u.has_value();

      // y in R_s R_t with y r = r, written as y = sum a_i b_i; then
      // R_t r = sum_i R_ts c_i with c_i = b_i r.
      std::optional<Element> y;
      for (Element e : p_st.members()) {
        if (r.multiply(st, e, s, x) == x) {
          y = e;
          break;
        }
      }
      bool decomposed = false;
      if (y) {
        if (auto terms = express_as_sum(r.component(st), ab_values, *y)) {
          json ab = json::array();
          std::vector<Element> c_seeds;
          json generators = json::array();
          for (std::size_t i : *terms) {
            const auto [a, b] = ab_source[i];
            ab.push_back({a, b});
            const Element c = r.multiply(t, b, s, x);
            generators.push_back(c);
            for (Element z = 0; z < r_ts.order(); ++z) c_seeds.push_back(r_ts.mul(z, c));
          }
          decomposed = additive_closure(r.component(ts), c_seeds) == ideal;
          entry["y"] = *y;
          entry["a_b"] = ab;
          entry["c"] = generators;
        }
      }
      entry["ideal_from_generators"] = decomposed;
      all_decomposed = all_decomposed && decomposed;

      // u = r' r for some r' in R_t, and then r = r r' r.
      bool constructive = false;
      if (u) {
        for (Element rp = 0; rp < r.component(t).order() && !constructive; ++rp) {
          if (r.multiply(t, rp, s, x) != *u) continue;
          if (r.multiply(st, r.multiply(s, x, t, rp), s, x) == x) {
            constructive = true;
            entry["quasi_inverse"] = rp;
          }
        }
      }
      all_constructive = all_constructive && constructive;
      triples.push_back(entry);
    }
  }
  rep.add("hypotheses", true);
  rep.add("idempotent_generators_found", all_found, count == 0);
  rep.add("ideal_finitely_generated", all_decomposed, count == 0);
  rep.add("quasi_inverse_from_generator", all_constructive, count == 0);
  rep.require_equal({"hypotheses", "idempotent_generators_found", "ideal_finitely_generated",
                     "quasi_inverse_from_generator"});
  rep.details = {{"triples", triples}, {"triple_count", count}};
  return rep;
}

CheckReport check_theorem_inverse_semigroup(const GradedRing& r) {
  CheckReport rep;
  rep.check = "inverse";
  if (!is_semigroup_base(r)) {
    rep.skip("base is a groupoid");
    return rep;
  }
  if (!r.base().is_inverse()) {
    rep.skip("base is not an inverse semigroup");
    return rep;
  }
  const auto all_t = is_graded_vnr(r);
  const auto some_t = graded_vnr_some_inverse(r);
  const auto nearly = is_nearly_epsilon_strong(r);
  const auto comps = base_components_vnr(r);
  rep.add("graded_vnr", all_t.holds, all_t.vacuous);
  rep.add("graded_vnr_some_inverse", some_t.holds, some_t.vacuous);
  rep.add("nearly_eps_and_components_vnr", nearly.holds && comps.holds);
  rep.require_equal({"graded_vnr", "graded_vnr_some_inverse", "nearly_eps_and_components_vnr"});
  rep.details = {{"graded_vnr", witness_json(all_t)}};
  return rep;
}

CheckReport check_corollaries(const GradedRing& r) {
  CheckReport rep;
  rep.check = "corollaries";
  const auto eps = is_epsilon_strong(r);
  const auto strong = is_strong(r);
  json applied = json::array();
  if (!eps.holds && !strong.holds) {
    rep.skip("grading is neither epsilon-strong nor strong");
    return rep;
  }
  const auto graded = is_graded_vnr(r);
  const auto comps = base_components_vnr(r);
  rep.add("epsilon_strong", eps.holds);
  rep.add("strong", strong.holds);
  rep.add("graded_vnr", graded.holds, graded.vacuous);
  rep.add("base_components_vnr", comps.holds);
  if (eps.holds) {
    applied.push_back("epsilon-strong");
    rep.require_equal({"graded_vnr", "base_components_vnr"});
  }
  if (strong.holds) {
    const auto nearly = is_nearly_epsilon_strong(r);
    const auto s_unital = base_components_s_unital(r);
    rep.add("nearly_epsilon_strong", nearly.holds);
    rep.add("components_s_unital", s_unital.holds);
    applied.push_back("strong-remark");
    rep.require_equal({"nearly_epsilon_strong", "components_s_unital"});
    if (s_unital.holds) {
      applied.push_back("strong");
      rep.require_equal({"graded_vnr", "base_components_vnr"});
    }
  }
  rep.details = {{"applied", applied}};
  return rep;
}

CheckReport check_prop_switch(const GradedRing& r) {
  CheckReport rep;
  rep.check = "switch";
  if (is_semigroup_base(r)) {
    rep.skip("base is not a groupoid");
    return rep;
  }
  const GradedRing regraded = regrade_groupoid_to_semigroup(r);
  rep.add("epsilon_strong_groupoid", is_epsilon_strong(r).holds);
  rep.add("epsilon_strong_regraded", is_epsilon_strong(regraded).holds);
  rep.add("nearly_epsilon_strong_groupoid", is_nearly_epsilon_strong(r).holds);
  rep.add("nearly_epsilon_strong_regraded", is_nearly_epsilon_strong(regraded).holds);
  rep.require_equal({"epsilon_strong_groupoid", "epsilon_strong_regraded"});
  rep.require_equal({"nearly_epsilon_strong_groupoid", "nearly_epsilon_strong_regraded"});
  rep.details = {{"regraded_base_order", regraded.base().size()},
                 {"regraded_base_inverse", regraded.base().is_inverse()}};
  return rep;
}

CheckReport check_theorem_groupoid(const GradedRing& r) {
  CheckReport rep;
  rep.check = "groupoid";
  if (is_semigroup_base(r)) {
    rep.skip("base is not a groupoid");
    return rep;
  }
  const auto in_rRr = homogeneous_regular(r);
  const auto with_inverse = is_graded_vnr(r);
  const auto nearly = is_nearly_epsilon_strong(r);
  const auto comps = base_components_vnr(r);
  const GradedRing regraded = regrade_groupoid_to_semigroup(r);
  const auto regraded_vnr = is_graded_vnr(regraded);
  rep.add("homogeneous_in_rRr", in_rRr.holds, in_rRr.vacuous);
  rep.add("quasi_inverse_in_inverse_degree", with_inverse.holds, with_inverse.vacuous);
  rep.add("nearly_eps_and_objects_vnr", nearly.holds && comps.holds);
  rep.add("regraded_graded_vnr", regraded_vnr.holds, regraded_vnr.vacuous);
  rep.require_equal({"homogeneous_in_rRr", "quasi_inverse_in_inverse_degree",
                     "nearly_eps_and_objects_vnr", "regraded_graded_vnr"});
  rep.details = {{"quasi_inverses", witness_json(with_inverse)},
                 {"failing_object", opt_json(comps.failing)}};
  return rep;
}

json classify_graded(const GradedRing& r) {
  const auto sym = is_symmetric(r);
  const auto strong = is_strong(r);
  const auto eps = is_epsilon_strong(r);
  const auto nearly = is_nearly_epsilon_strong(r);
  const auto graded = is_graded_vnr(r);
  const auto comps = base_components_vnr(r);
  auto verdict = [](bool v, bool vacuous) { return json{{"value", v}, {"vacuous", vacuous}}; };
  json base = {{"kind", r.base().is_groupoid() ? "groupoid" : "semigroup"},
               {"order", r.base().size()},
               {"idempotents", r.base().idempotents()},
               {"inverse", r.base().is_inverse()}};
  json comp_orders = json::array();
  for (const auto& c : r.components()) comp_orders.push_back(c.order());
  json failing_component = opt_json(comps.failing);
  return {{"base", base},
          {"component_orders", comp_orders},
          {"verdicts",
           {{"symmetric", verdict(sym.holds, sym.vacuous)},
            {"strong", verdict(strong.holds, false)},
            {"epsilon_strong", verdict(eps.holds, eps.vacuous)},
            {"nearly_epsilon_strong", verdict(nearly.holds, nearly.vacuous)},
            {"graded_vnr", verdict(graded.holds, graded.vacuous)},
            {"base_components_vnr", verdict(comps.holds, false)}}},
          {"witnesses",
           {{"symmetric_failing", pair_json(sym.failing)},
            {"strong_failing", pair_json(strong.failing)},
            {"epsilon", witness_json(eps.witness)},
            {"nearly_epsilon", witness_json(nearly.witness)},
            {"graded_vnr", witness_json(graded)},
            {"failing_component", failing_component}}}};
}

}  // namespace grl
