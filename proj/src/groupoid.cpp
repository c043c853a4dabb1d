#include "grl/groupoid.hpp"

#include "grl/error.hpp"

namespace grl {

std::string FiniteGroupoid::morphism_label(Element g) const {
  return morphisms_[g].label.empty() ? std::to_string(g) : morphisms_[g].label;
}

RawGroupoid FiniteGroupoid::raw() const {
  RawGroupoid r;
  r.objects = objects_;
  r.morphisms = morphisms_;
  const std::size_t m = morphisms_.size();
  for (Element g = 0; g < m; ++g) {
    for (Element h = 0; h < m; ++h) {
      if (auto gh = compose(g, h)) r.compose.push_back({g, h, *gh});
    }
  }
  return r;
}

FiniteGroupoid validate_groupoid(const RawGroupoid& raw) {
  const std::size_t n_obj = raw.objects.size();
  const std::size_t m = raw.morphisms.size();
  if (n_obj == 0) throw ValidationError("BadShape", {0}, "groupoid needs an object");

  for (std::size_t g = 0; g < m; ++g) {
    const auto& mg = raw.morphisms[g];
    if (mg.dom >= n_obj || mg.cod >= n_obj || mg.inv >= m) {
      throw ValidationError("OutOfRange", {g}, "morphism fields out of range");
    }
  }

  std::vector<Element> compose(m * m, kNotComposable);
  for (const auto& [g, h, gh] : raw.compose) {
    if (g >= m || h >= m || gh >= m) {
      throw ValidationError("OutOfRange", {g, h, gh}, "compose triple out of range");
    }
    if (raw.morphisms[g].dom != raw.morphisms[h].cod) {
      throw ValidationError("NotComposableClosed", {g, h},
                            "product listed for a pair with d(g) != c(h)");
    }
    if (compose[g * m + h] != kNotComposable && compose[g * m + h] != gh) {
      throw ValidationError("NotComposableClosed", {g, h}, "conflicting products");
    }
    compose[g * m + h] = gh;
  }
  for (Element g = 0; g < m; ++g) {
    for (Element h = 0; h < m; ++h) {
      if (raw.morphisms[g].dom != raw.morphisms[h].cod) continue;
      const Element gh = compose[g * m + h];
      if (gh == kNotComposable) {
        throw ValidationError("NotComposableClosed", {g, h}, "composable pair has no product");
      }
      if (raw.morphisms[gh].dom != raw.morphisms[h].dom ||
          raw.morphisms[gh].cod != raw.morphisms[g].cod) {
        throw ValidationError("NotComposableClosed", {g, h},
                              "product has wrong domain or codomain");
      }
    }
  }

  std::vector<Element> identities(n_obj, kNotComposable);
  for (Element e = 0; e < n_obj; ++e) {
    for (Element i = 0; i < m && identities[e] == kNotComposable; ++i) {
      if (raw.morphisms[i].dom != e || raw.morphisms[i].cod != e) continue;
      bool ok = true;
      for (Element g = 0; g < m && ok; ++g) {
        if (raw.morphisms[g].dom == e) ok = compose[g * m + i] == g;
        if (ok && raw.morphisms[g].cod == e) ok = compose[i * m + g] == g;
      }
      if (ok) identities[e] = i;
    }
    if (identities[e] == kNotComposable) {
      throw ValidationError("IdentityViolation", {e}, "object has no identity morphism");
    }
  }

  for (Element g = 0; g < m; ++g) {
    const Element inv = raw.morphisms[g].inv;
    const Element right = compose[g * m + inv];
    const Element left = compose[inv * m + g];
    if (right != identities[raw.morphisms[g].cod] || left != identities[raw.morphisms[g].dom]) {
      throw ValidationError("InverseViolation", {g, inv});
    }
  }

  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) {
      const Element ab = compose[a * m + b];
      if (ab == kNotComposable) continue;
      for (Element c = 0; c < m; ++c) {
        const Element bc = compose[b * m + c];
        if (bc == kNotComposable) continue;
        if (compose[ab * m + c] != compose[a * m + bc]) {
          throw ValidationError("NotAssociative", {a, b, c});
        }
      }
    }
  }

  FiniteGroupoid out;
  out.objects_ = raw.objects;
  out.morphisms_ = raw.morphisms;
  out.compose_ = std::move(compose);
  out.identities_ = std::move(identities);
  return out;
}

GroupoidSemigroup to_inverse_semigroup(const FiniteGroupoid& g) {
  const std::size_t m = g.num_morphisms();
  const std::size_t n = m + 1;
  std::vector<Element> table(n * n, 0);
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) {
      if (auto ab = g.compose(a, b)) table[(a + 1) * n + (b + 1)] = *ab + 1;
    }
  }
  std::vector<std::string> labels{"0"};
  std::vector<Element> embedding;
  for (Element a = 0; a < m; ++a) {
    labels.push_back(g.morphism_label(a));
    embedding.push_back(a + 1);
  }
  return {validate_semigroup(n, std::move(table), std::move(labels)), std::move(embedding)};
}

FiniteGroupoid group_groupoid(const FiniteSemigroup& group) {
  const auto c = classify_semigroup(group);
  if (!c.is_group) throw Error("group_groupoid: semigroup is not a group");
  RawGroupoid raw;
  raw.objects = {"*"};
  for (Element x = 0; x < group.order(); ++x) {
    raw.morphisms.push_back({0, 0, c.inverse_sets[x].front(), group.label(x)});
    for (Element y = 0; y < group.order(); ++y) raw.compose.push_back({x, y, group.product(x, y)});
  }
  return validate_groupoid(raw);
}

FiniteGroupoid pair_groupoid(std::size_t n) {
  RawGroupoid raw;
  for (std::size_t i = 0; i < n; ++i) raw.objects.push_back(std::to_string(i + 1));
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      raw.morphisms.push_back(
          {j, i, Element(j * n + i), "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"});
    }
  }
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      for (Element k = 0; k < n; ++k) {
        raw.compose.push_back({Element(i * n + j), Element(j * n + k), Element(i * n + k)});
      }
    }
  }
  return validate_groupoid(raw);
}

FiniteGroupoid trivial_groupoid() {
  RawGroupoid raw;
  raw.objects = {"*"};
  raw.morphisms = {{0, 0, 0, "id"}};
  raw.compose = {{0, 0, 0}};
  return validate_groupoid(raw);
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  RawGroupoid ra = a.raw();
  RawGroupoid rb = b.raw();
  const auto obj_shift = Element(ra.objects.size());
  const auto mor_shift = Element(ra.morphisms.size());
  for (auto& o : rb.objects) ra.objects.push_back(o + "'");
  for (auto m : rb.morphisms) {
    m.dom += obj_shift;
    m.cod += obj_shift;
    m.inv += mor_shift;
    if (!m.label.empty()) m.label += "'";
    ra.morphisms.push_back(m);
  }
  for (auto [g, h, gh] : rb.compose) {
    ra.compose.push_back({g + mor_shift, h + mor_shift, gh + mor_shift});
  }
  return validate_groupoid(ra);
}

}  // namespace grl
