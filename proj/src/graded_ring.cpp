#include "grl/graded_ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "grl/error.hpp"

namespace grl {

GradingBase::GradingBase(FiniteSemigroup s) : base_(std::move(s)) {
  const auto& sg = std::get<FiniteSemigroup>(base_);
  size_ = sg.order();
  const auto c = classify_semigroup(sg);
  for (Element x = 0; x < size_; ++x) {
    for (Element y : c.inverse_sets[x]) inverse_pairs_.emplace_back(x, y);
  }
  idempotents_ = c.idempotents;
  is_inverse_ = c.is_inverse;
}

GradingBase::GradingBase(FiniteGroupoid g) : base_(std::move(g)) {
  const auto& gg = std::get<FiniteGroupoid>(base_);
  size_ = gg.num_morphisms();
  for (Element x = 0; x < size_; ++x) inverse_pairs_.emplace_back(x, gg.inverse(x));
  for (Element e = 0; e < gg.num_objects(); ++e) idempotents_.push_back(gg.identity(e));
  std::sort(idempotents_.begin(), idempotents_.end());
  is_inverse_ = true;
}

std::optional<Element> GradingBase::product(Element s, Element t) const {
  if (const auto* g = groupoid()) return g->compose(s, t);
  return semigroup()->product(s, t);
}

std::string GradingBase::label(Element s) const {
  if (const auto* g = groupoid()) return g->morphism_label(s);
  return semigroup()->label(s);
}

std::vector<std::pair<Element, Element>> GradedRing::product_pairs() const {
  std::vector<std::pair<Element, Element>> out;
  const std::size_t n = base_.size();
  for (Element s = 0; s < n; ++s) {
    for (Element t = 0; t < n; ++t) {
      if (!tables_[s * n + t].empty()) out.emplace_back(s, t);
    }
  }
  return out;
}

const FiniteRing& GradedRing::component_ring(Element e) const {
  if (e >= component_rings_.size() || !component_rings_[e]) {
    throw Error("component_ring: " + base_.label(e) + " is not an idempotent of the base");
  }
  return *component_rings_[e];
}

GradedRing validate_grading(RawGrading raw) {
  const std::size_t n = raw.base.size();
  if (raw.components.size() != n) {
    throw ValidationError("BadShape", {raw.components.size(), n},
                          "one component per base element required");
  }
  GradedRing out(std::move(raw.base));
  out.components_ = std::move(raw.components);
  out.tables_.assign(n * n, {});
  const GradingBase& base = out.base_;
  const auto& comps = out.components_;

  for (auto& [key, table] : raw.products) {
    const auto [s, t] = key;
    if (s >= n || t >= n) throw ValidationError("BadShape", {s, t}, "product key out of range");
    const auto st = base.product(s, t);
    if (!st) throw ValidationError("NonComposableProductPresent", {s, t});
    const std::size_t ns = comps[s].order(), nt = comps[t].order();
    if (table.size() != ns * nt) {
      throw ValidationError("BadShape", {s, t}, "product table must be |R_s| x |R_t|");
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= comps[*st].order()) {
        throw ValidationError("CodomainViolation", {s, t, i / nt, i % nt});
      }
    }
    const bool zero = std::all_of(table.begin(), table.end(), [](Element x) { return x == 0; });
    if (!zero) out.tables_[s * n + t] = std::move(table);
  }

  for (Element s = 0; s < n; ++s) {
    for (Element t = 0; t < n; ++t) {
      const ProductTable* p = out.product_table(s, t);
      if (!p) continue;
      const auto& gs = comps[s];
      const auto& gt = comps[t];
      const auto& gst = comps[*base.product(s, t)];
      const std::size_t nt = gt.order();
      auto m = [&](Element a, Element b) { return (*p)[a * nt + b]; };
      for (Element a = 0; a < gs.order(); ++a) {
        for (Element a2 = 0; a2 < gs.order(); ++a2) {
          for (Element b = 0; b < nt; ++b) {
            if (m(gs.add(a, a2), b) != gst.add(m(a, b), m(a2, b))) {
              throw ValidationError("BilinearityViolation", {s, t, a, a2, b}, "(a+a')b");
            }
          }
        }
        for (Element b = 0; b < nt; ++b) {
          for (Element b2 = 0; b2 < nt; ++b2) {
            if (m(a, gt.add(b, b2)) != gst.add(m(a, b), m(a, b2))) {
              throw ValidationError("BilinearityViolation", {s, t, a, b, b2}, "a(b+b')");
            }
          }
        }
      }
    }
  }

  for (Element s = 0; s < n; ++s) {
    for (Element t = 0; t < n; ++t) {
      const auto st = base.product(s, t);
      if (!st) continue;
      for (Element u = 0; u < n; ++u) {
        const auto tu = base.product(t, u);
        if (!tu) continue;
        const bool left_zero = !out.product_table(s, t) || !out.product_table(*st, u);
        const bool right_zero = !out.product_table(t, u) || !out.product_table(s, *tu);
        if (left_zero && right_zero) continue;
        for (Element a = 0; a < comps[s].order(); ++a) {
          for (Element b = 0; b < comps[t].order(); ++b) {
            const Element ab = out.multiply(s, a, t, b);
            for (Element c = 0; c < comps[u].order(); ++c) {
              if (out.multiply(*st, ab, u, c) != out.multiply(s, a, *tu, out.multiply(t, b, u, c))) {
                throw ValidationError("AssociativityViolation", {s, t, u, a, b, c});
              }
            }
          }
        }
      }
    }
  }

  out.component_rings_.resize(n);
  for (Element e : base.idempotents()) {
    const std::size_t k = comps[e].order();
    const ProductTable* p = out.product_table(e, e);
    std::vector<Element> mul = p ? *p : std::vector<Element>(k * k, 0);
    // Bilinearity and associativity were checked above.
    out.component_rings_[e] = validate_ring(comps[e], std::move(mul));
  }
  return out;
}

Subgroup product_subgroup(const GradedRing& r, Element s, Element t) {
  const auto st = r.base().product(s, t);
  if (!st) throw Error("product_subgroup: pair is not composable");
  std::vector<Element> seeds;
  for (Element a = 0; a < r.component(s).order(); ++a) {
    for (Element b = 0; b < r.component(t).order(); ++b) seeds.push_back(r.multiply(s, a, t, b));
  }
  Subgroup out = additive_closure(r.component(*st), seeds);
  const auto& pairs = r.base().inverse_pairs();
  if (std::find(pairs.begin(), pairs.end(), std::pair{s, t}) != pairs.end()) {
    const FiniteRing& ring = r.component_ring(*st);
    if (!is_left_ideal(ring, out) || !is_right_ideal(ring, out)) {
      throw std::logic_error("R_s R_t is not an ideal of R_st for t in V(s)");
    }
  }
  return out;
}

Subgroup triple_product_subgroup(const GradedRing& r, Element s, Element t) {
  const auto st = r.base().product(s, t);
  const auto sts = st ? r.base().product(*st, s) : std::nullopt;
  if (!sts) throw Error("triple_product_subgroup: triple is not composable");
  std::vector<Element> seeds;
  for (Element a = 0; a < r.component(s).order(); ++a) {
    for (Element b = 0; b < r.component(t).order(); ++b) {
      const Element ab = r.multiply(s, a, t, b);
      for (Element c = 0; c < r.component(s).order(); ++c) {
        seeds.push_back(r.multiply(*st, ab, s, c));
      }
    }
  }
  return additive_closure(r.component(*sts), seeds);
}

GradedRing regrade_groupoid_to_semigroup(const GradedRing& r) {
  const FiniteGroupoid* g = r.base().groupoid();
  if (!g) throw Error("regrade: base is not a groupoid");
  auto sg = to_inverse_semigroup(*g);
  RawGrading raw{GradingBase(std::move(sg.semigroup)), {}, {}};
  raw.components.push_back(trivial_additive_group());
  for (const auto& c : r.components()) raw.components.push_back(c);
  for (auto [s, t] : r.product_pairs()) {
    raw.products[{sg.embedding[s], sg.embedding[t]}] = *r.product_table(s, t);
  }
  return validate_grading(std::move(raw));
}

}  // namespace grl
