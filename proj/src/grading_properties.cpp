#include "grl/grading_properties.hpp"

#include <algorithm>

namespace grl {

std::optional<Element> subring_unity(const FiniteRing& ring) {
  if (ring.order() == 1) return kZeroRingIsUnital ? std::optional<Element>(0) : std::nullopt;
  return unity(ring);
}

namespace {

Element compose(const GradedRing& r, Element s, Element t) { return *r.base().product(s, t); }

// R_s R_t as a ring in its own right; t must lie in V(s).
Subring product_ring_of(const GradedRing& r, Element s, Element t) {
  return restrict_to_subring(r.component_ring(compose(r, s, t)), product_subgroup(r, s, t));
}

Element index_in(const Subring& sub, Element parent) {
  auto it = std::lower_bound(sub.embedding.begin(), sub.embedding.end(), parent);
  return Element(it - sub.embedding.begin());
}

}  // namespace

PairVerdict is_symmetric(const GradedRing& r) {
  PairVerdict v;
  v.holds = true;
  v.vacuous = r.base().inverse_pairs().empty();
  for (auto [s, t] : r.base().inverse_pairs()) {
    if (triple_product_subgroup(r, s, t).size() != r.component(s).order()) {
      v.holds = false;
      v.failing = {s, t};
      v.reason = "R_s R_t R_s is a proper subgroup of R_s";
      break;
    }
  }
  return v;
}

PairVerdict is_strong(const GradedRing& r) {
  PairVerdict v;
  v.holds = true;
  const std::size_t n = r.base().size();
  for (Element s = 0; s < n && v.holds; ++s) {
    for (Element t = 0; t < n; ++t) {
      if (!r.base().product(s, t)) continue;
      if (!product_subgroup(r, s, t).is_whole()) {
        v.holds = false;
        v.failing = {s, t};
        v.reason = "R_s R_t is a proper subgroup of R_st";
        break;
      }
    }
  }
  return v;
}

EpsilonVerdict is_epsilon_strong(const GradedRing& r) {
  EpsilonVerdict v;
  const auto sym = is_symmetric(r);
  v.symmetric = sym.holds;
  v.vacuous = sym.vacuous;
  v.holds = sym.holds;
  if (!sym.holds) {
    v.failing = sym.failing;
    v.reason = "not symmetric";
  }
  v.witness.kind = EpsilonWitness::Kind::uniform;
  for (auto [s, t] : r.base().inverse_pairs()) {
    const Subring st = product_ring_of(r, s, t);
    const Subring ts = product_ring_of(r, t, s);
    const auto u = subring_unity(st.ring);
    const auto u_prime = subring_unity(ts.ring);
    if (!u || !u_prime) {
      if (v.holds) {
        v.holds = false;
        v.failing = u ? std::pair{t, s} : std::pair{s, t};
        v.reason = "R_s R_t has no unity";
      }
      continue;
    }
    v.witness.uniform.push_back({s, t, st.embedding[*u], ts.embedding[*u_prime]});
  }
  if (!v.holds) v.witness.uniform.clear();
  return v;
}

EpsilonVerdict is_nearly_epsilon_strong(const GradedRing& r) {
  EpsilonVerdict v;
  const auto sym = is_symmetric(r);
  v.symmetric = sym.holds;
  v.vacuous = sym.vacuous;
  v.holds = sym.holds;
  if (!sym.holds) {
    v.failing = sym.failing;
    v.reason = "not symmetric";
    return v;
  }
  v.witness.kind = EpsilonWitness::Kind::per_element;
  for (auto [s, t] : r.base().inverse_pairs()) {
    const Subring st = product_ring_of(r, s, t);
    if (!is_s_unital(st.ring)) {
      v.holds = false;
      v.failing = {s, t};
      v.reason = "R_s R_t is not s-unital";
      v.witness.local.clear();
      return v;
    }
  }
  // Build eps(r), eps'(r) from r = sum a_i b_i c_i and common units.
  for (auto [s, t] : r.base().inverse_pairs()) {
    const Element st_deg = compose(r, s, t), ts_deg = compose(r, t, s);
    const Subring st = product_ring_of(r, s, t);
    const Subring ts = product_ring_of(r, t, s);
    std::vector<Element> values;
    std::vector<std::array<Element, 3>> source;
    std::vector<char> seen(r.component(s).order(), 0);
    for (Element a = 0; a < r.component(s).order(); ++a) {
      for (Element b = 0; b < r.component(t).order(); ++b) {
        const Element ab = r.multiply(s, a, t, b);
        for (Element c = 0; c < r.component(s).order(); ++c) {
          const Element abc = r.multiply(st_deg, ab, s, c);
          if (seen[abc]) continue;
          seen[abc] = 1;
          values.push_back(abc);
          source.push_back({a, b, c});
        }
      }
    }
    for (Element x = 0; x < r.component(s).order(); ++x) {
      const auto terms = express_as_sum(r.component(s), values, x);
      std::vector<Element> left_targets, right_targets;
      if (terms) {
        for (std::size_t i : *terms) {
          const auto [a, b, c] = source[i];
          left_targets.push_back(index_in(st, r.multiply(s, a, t, b)));
          right_targets.push_back(index_in(ts, r.multiply(t, b, s, c)));
        }
      }
      const auto e = common_unit(st.ring, left_targets, Side::left);
      const auto e_prime = common_unit(ts.ring, right_targets, Side::right);
      const bool ok = terms && e && e_prime &&
                      r.multiply(st_deg, st.embedding[*e], s, x) == x &&
                      r.multiply(s, x, ts_deg, ts.embedding[*e_prime]) == x;
      if (!ok) {
        v.holds = false;
        v.failing = {s, t};
        v.failing_element = x;
        v.reason = "local unit construction failed";
        v.witness.local.clear();
        return v;
      }
      v.witness.local.push_back({s, t, x, st.embedding[*e], ts.embedding[*e_prime]});
    }
  }
  return v;
}

EpsilonVerdict epsilon_strong_by_elements(const GradedRing& r) {
  EpsilonVerdict v;
  v.holds = true;
  v.vacuous = r.base().inverse_pairs().empty();
  v.witness.kind = EpsilonWitness::Kind::uniform;
  for (auto [s, t] : r.base().inverse_pairs()) {
    const Element st_deg = compose(r, s, t), ts_deg = compose(r, t, s);
    const auto n_s = r.component(s).order();
    std::optional<Element> eps, eps_prime;
    const Subgroup left = product_subgroup(r, s, t);
    const Subgroup right = product_subgroup(r, t, s);
    for (Element e : left.members()) {
      bool ok = true;
      for (Element x = 0; x < n_s && ok; ++x) ok = r.multiply(st_deg, e, s, x) == x;
      if (ok) {
        eps = e;
        break;
      }
    }
    for (Element e : right.members()) {
      bool ok = true;
      for (Element x = 0; x < n_s && ok; ++x) ok = r.multiply(s, x, ts_deg, e) == x;
      if (ok) {
        eps_prime = e;
        break;
      }
    }
    if (!eps || !eps_prime) {
      v.holds = false;
      v.failing = {s, t};
      v.reason = eps ? "no right unit for R_s in R_t R_s" : "no left unit for R_s in R_s R_t";
      v.witness.uniform.clear();
      return v;
    }
    v.witness.uniform.push_back({s, t, *eps, *eps_prime});
  }
  return v;
}

EpsilonVerdict nearly_epsilon_strong_by_elements(const GradedRing& r) {
  EpsilonVerdict v;
  v.holds = true;
  v.vacuous = r.base().inverse_pairs().empty();
  v.witness.kind = EpsilonWitness::Kind::per_element;
  for (auto [s, t] : r.base().inverse_pairs()) {
    const Element st_deg = compose(r, s, t), ts_deg = compose(r, t, s);
    const Subgroup left = product_subgroup(r, s, t);
    const Subgroup right = product_subgroup(r, t, s);
    for (Element x = 0; x < r.component(s).order(); ++x) {
      std::optional<Element> eps, eps_prime;
      for (Element e : left.members()) {
        if (r.multiply(st_deg, e, s, x) == x) {
          eps = e;
          break;
        }
      }
      for (Element e : right.members()) {
        if (r.multiply(s, x, ts_deg, e) == x) {
          eps_prime = e;
          break;
        }
      }
      if (!eps || !eps_prime) {
        v.holds = false;
        v.failing = {s, t};
        v.failing_element = x;
        v.reason = eps ? "no local right unit" : "no local left unit";
        v.witness.local.clear();
        return v;
      }
      v.witness.local.push_back({s, t, x, *eps, *eps_prime});
    }
  }
  return v;
}

GradedVnrWitness is_graded_vnr(const GradedRing& r) {
  GradedVnrWitness w;
  w.holds = true;
  w.vacuous = true;
  for (auto [s, t] : r.base().inverse_pairs()) {
    if (r.component(s).order() > 1) w.vacuous = false;
    const Element st = compose(r, s, t);
    for (Element x = 0; x < r.component(s).order(); ++x) {
      std::optional<Element> found;
      for (Element y = 0; y < r.component(t).order() && !found; ++y) {
        if (r.multiply(st, r.multiply(s, x, t, y), s, x) == x) found = y;
      }
      if (!found) {
        w.holds = false;
        w.failing = std::array<Element, 3>{s, x, t};
        w.triples.clear();
        return w;
      }
      w.triples.push_back({s, x, t, *found});
    }
  }
  return w;
}

GradedVnrWitness graded_vnr_some_inverse(const GradedRing& r) {
  GradedVnrWitness w;
  w.holds = true;
  w.vacuous = true;
  const auto& pairs = r.base().inverse_pairs();
  for (Element s = 0; s < r.base().size(); ++s) {
    for (Element x = 0; x < r.component(s).order(); ++x) {
      std::optional<GradedVnrTriple> hit;
      for (auto [s2, t] : pairs) {
        if (s2 != s || hit) continue;
        w.vacuous = w.vacuous && r.component(s).order() == 1;
        const Element st = compose(r, s, t);
        for (Element y = 0; y < r.component(t).order() && !hit; ++y) {
          if (r.multiply(st, r.multiply(s, x, t, y), s, x) == x) hit = GradedVnrTriple{s, x, t, y};
        }
      }
      if (!hit) {
        w.holds = false;
        w.failing = std::array<Element, 3>{s, x, s};
        w.triples.clear();
        return w;
      }
      w.triples.push_back(*hit);
    }
  }
  return w;
}

GradedVnrWitness homogeneous_regular(const GradedRing& r) {
  GradedVnrWitness w;
  w.holds = true;
  w.vacuous = true;
  const auto& base = r.base();
  for (Element s = 0; s < base.size(); ++s) {
    if (r.component(s).order() > 1) w.vacuous = false;
    for (Element x = 0; x < r.component(s).order(); ++x) {
      std::vector<Element> seeds;
      std::optional<GradedVnrTriple> single;
      for (Element h = 0; h < base.size(); ++h) {
        const auto sh = base.product(s, h);
        const auto shs = sh ? base.product(*sh, s) : std::nullopt;
        // Terms r y r landing outside R_s must vanish separately, so only
        // the h with shs = s can contribute to r.
        if (!shs || *shs != s) continue;
        for (Element y = 0; y < r.component(h).order(); ++y) {
          const Element term = r.multiply(*sh, r.multiply(s, x, h, y), s, x);
          seeds.push_back(term);
          if (!single && term == x) single = GradedVnrTriple{s, x, h, y};
        }
      }
      if (!additive_closure(r.component(s), seeds).contains(x)) {
        w.holds = false;
        w.failing = std::array<Element, 3>{s, x, s};
        w.triples.clear();
        return w;
      }
      if (single) w.triples.push_back(*single);
    }
  }
  return w;
}

ComponentVerdict base_components_vnr(const GradedRing& r) {
  ComponentVerdict v;
  v.holds = true;
  for (Element e : r.base().idempotents()) {
    auto w = is_von_neumann_regular(r.component_ring(e));
    if (!w.holds && v.holds) {
      v.holds = false;
      v.failing = e;
    }
    v.witnesses.emplace_back(e, std::move(w));
  }
  return v;
}

ComponentVerdict base_components_s_unital(const GradedRing& r) {
  ComponentVerdict v;
  v.holds = true;
  for (Element e : r.base().idempotents()) {
    if (!is_s_unital(r.component_ring(e))) {
      v.holds = false;
      v.failing = e;
      break;
    }
  }
  return v;
}

}  // namespace grl
