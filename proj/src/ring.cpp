#include "grl/ring.hpp"

#include <algorithm>
#include <map>

#include "grl/error.hpp"

namespace grl {

namespace {
constexpr Element kAbsent = static_cast<Element>(-1);
}  // namespace

FiniteAdditiveGroup validate_additive_group(std::size_t n, std::vector<Element> add,
                                            std::vector<Element> neg) {
  if (n == 0) throw ValidationError("BadShape", {0}, "order must be positive");
  if (add.size() != n * n || neg.size() != n) {
    throw ValidationError("BadShape", {add.size(), neg.size()}, "additive tables have wrong size");
  }
  for (std::size_t i = 0; i < add.size(); ++i) {
    if (add[i] >= n) throw ValidationError("OutOfRange", {i / n, i % n}, "add entry");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (neg[i] >= n) throw ValidationError("OutOfRange", {i}, "neg entry");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (add[x * n] != x || add[x] != x) throw ValidationError("BadZero", {x});
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (add[a * n + b] != add[b * n + a]) throw ValidationError("NotCommutative", {a, b});
    }
  }
  if (auto bad = find_associativity_violation(n, add)) {
    throw ValidationError("NotAssociative", {(*bad)[0], (*bad)[1], (*bad)[2]}, "addition");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (add[x * n + neg[x]] != 0) throw ValidationError("BadNegation", {x});
  }
  FiniteAdditiveGroup g;
  g.order_ = n;
  g.add_ = std::move(add);
  g.neg_ = std::move(neg);
  return g;
}

FiniteAdditiveGroup cyclic_additive_group(std::size_t n) {
  std::vector<Element> add(n * n), neg(n);
  for (std::size_t a = 0; a < n; ++a) {
    neg[a] = Element((n - a) % n);
    for (std::size_t b = 0; b < n; ++b) add[a * n + b] = Element((a + b) % n);
  }
  return validate_additive_group(n, std::move(add), std::move(neg));
}

FiniteAdditiveGroup trivial_additive_group() { return cyclic_additive_group(1); }

FiniteRing validate_ring(FiniteAdditiveGroup additive, std::vector<Element> mul) {
  const std::size_t n = additive.order();
  if (mul.size() != n * n) throw ValidationError("BadShape", {mul.size()}, "mul table size");
  for (std::size_t i = 0; i < mul.size(); ++i) {
    if (mul[i] >= n) throw ValidationError("OutOfRange", {i / n, i % n}, "mul entry");
  }
  auto m = [&](std::size_t a, std::size_t b) { return mul[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const Element bc = additive.add(Element(b), Element(c));
        if (m(a, bc) != additive.add(m(a, b), m(a, c))) {
          throw ValidationError("Distributivity", {a, b, c}, "a(b+c) != ab+ac");
        }
        if (m(bc, a) != additive.add(m(b, a), m(c, a))) {
          throw ValidationError("Distributivity", {b, c, a}, "(b+c)a != ba+ca");
        }
      }
    }
  }
  if (auto bad = find_associativity_violation(n, mul)) {
    throw ValidationError("NotAssociative", {(*bad)[0], (*bad)[1], (*bad)[2]}, "multiplication");
  }
  FiniteRing r;
  r.additive_ = std::move(additive);
  r.mul_ = std::move(mul);
  return r;
}

Subgroup::Subgroup(std::size_t parent_order, std::span<const Element> members)
    : mask_(parent_order, 0) {
  for (Element x : members) mask_[x] = 1;
  for (Element x = 0; x < parent_order; ++x) {
    if (mask_[x]) members_.push_back(x);
  }
}

Subgroup additive_closure(const FiniteAdditiveGroup& group, std::span<const Element> seeds) {
  std::vector<char> in(group.order(), 0);
  std::vector<Element> members;
  std::vector<Element> work;
  auto push = [&](Element x) {
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  };
  push(FiniteAdditiveGroup::zero());
  for (Element s : seeds) push(s);
  while (!work.empty()) {
    const Element x = work.back();
    work.pop_back();
    members.push_back(x);
    push(group.neg(x));
    // Sums with every member already settled; later members pair with x
    // when they are settled themselves.
    for (std::size_t i = 0; i < members.size(); ++i) push(group.add(x, members[i]));
  }
  return Subgroup(group.order(), members);
}

Subgroup whole_group(const FiniteAdditiveGroup& group) {
  std::vector<Element> all(group.order());
  for (Element x = 0; x < all.size(); ++x) all[x] = x;
  return Subgroup(group.order(), all);
}

std::optional<std::vector<std::size_t>> express_as_sum(const FiniteAdditiveGroup& group,
                                                       std::span<const Element> generators,
                                                       Element target) {
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> via(group.order(), none);   // generator used to reach x
  std::vector<Element> from(group.order(), kAbsent);   // predecessor of x
  std::vector<Element> queue{FiniteAdditiveGroup::zero()};
  from[0] = 0;
  for (std::size_t head = 0; head < queue.size() && from[target] == kAbsent; ++head) {
    const Element x = queue[head];
    for (std::size_t g = 0; g < generators.size(); ++g) {
      const Element y = group.add(x, generators[g]);
      if (from[y] != kAbsent) continue;
      from[y] = x;
      via[y] = g;
      queue.push_back(y);
    }
  }
  if (from[target] == kAbsent) return std::nullopt;
  std::vector<std::size_t> terms;
  for (Element x = target; x != 0; x = from[x]) terms.push_back(via[x]);
  std::reverse(terms.begin(), terms.end());
  return terms;
}

SUnitality one_sided_s_unital(const FiniteRing& ring, Side side) {
  SUnitality out;
  out.holds = true;
  out.unit.resize(ring.order());
  for (Element x = 0; x < ring.order(); ++x) {
    for (Element u = 0; u < ring.order(); ++u) {
      const Element p = side == Side::left ? ring.mul(u, x) : ring.mul(x, u);
      if (p == x) {
        out.unit[x] = u;
        break;
      }
    }
    if (!out.unit[x] && out.holds) {
      out.holds = false;
      out.failing = x;
    }
  }
  return out;
}

SUnitality is_left_s_unital(const FiniteRing& ring) { return one_sided_s_unital(ring, Side::left); }
SUnitality is_right_s_unital(const FiniteRing& ring) { return one_sided_s_unital(ring, Side::right); }

bool is_s_unital(const FiniteRing& ring) {
  return is_left_s_unital(ring).holds && is_right_s_unital(ring).holds;
}

namespace {

std::optional<Element> scan_unity(const FiniteRing& ring, bool left, bool right) {
  for (Element u = 0; u < ring.order(); ++u) {
    bool ok = true;
    for (Element x = 0; x < ring.order() && ok; ++x) {
      if (left && ring.mul(u, x) != x) ok = false;
      if (right && ring.mul(x, u) != x) ok = false;
    }
    if (ok) return u;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Element> left_unity(const FiniteRing& ring) { return scan_unity(ring, true, false); }
std::optional<Element> right_unity(const FiniteRing& ring) { return scan_unity(ring, false, true); }
std::optional<Element> unity(const FiniteRing& ring) { return scan_unity(ring, true, true); }

std::optional<Element> common_unit(const FiniteRing& ring, std::span<const Element> targets,
                                   Side side) {
  for (Element u = 0; u < ring.order(); ++u) {
    const bool ok = std::all_of(targets.begin(), targets.end(), [&](Element v) {
      return (side == Side::left ? ring.mul(u, v) : ring.mul(v, u)) == v;
    });
    if (ok) return u;
  }
  return std::nullopt;
}

Subgroup product_ideal(const FiniteRing& ring, std::span<const Element> generators, Side side) {
  std::vector<Element> seeds;
  for (Element c : generators) {
    for (Element t = 0; t < ring.order(); ++t) {
      seeds.push_back(side == Side::left ? ring.mul(t, c) : ring.mul(c, t));
    }
  }
  return additive_closure(ring.additive(), seeds);
}

Subgroup one_sided_ideal(const FiniteRing& ring, std::span<const Element> generators, Side side) {
  std::vector<Element> seeds(generators.begin(), generators.end());
  for (Element c : generators) {
    for (Element t = 0; t < ring.order(); ++t) {
      seeds.push_back(side == Side::left ? ring.mul(t, c) : ring.mul(c, t));
    }
  }
  return additive_closure(ring.additive(), seeds);
}

Subgroup left_ideal(const FiniteRing& ring, std::span<const Element> generators) {
  return one_sided_ideal(ring, generators, Side::left);
}

Subgroup right_ideal(const FiniteRing& ring, std::span<const Element> generators) {
  return one_sided_ideal(ring, generators, Side::right);
}

namespace {

std::optional<std::pair<Element, Element>> ideal_violation(const FiniteRing& ring,
                                                           const Subgroup& ideal, Side side) {
  if (ideal.parent_order() != ring.order() || !ideal.contains(0)) {
    return std::pair<Element, Element>{0, 0};
  }
  for (Element a : ideal.members()) {
    for (Element b : ideal.members()) {
      if (!ideal.contains(ring.add(a, b))) return std::pair{a, b};
    }
    for (Element t = 0; t < ring.order(); ++t) {
      const Element p = side == Side::left ? ring.mul(t, a) : ring.mul(a, t);
      if (!ideal.contains(p)) return std::pair{t, a};
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_left_ideal(const FiniteRing& ring, const Subgroup& ideal) {
  return !ideal_violation(ring, ideal, Side::left);
}

bool is_right_ideal(const FiniteRing& ring, const Subgroup& ideal) {
  return !ideal_violation(ring, ideal, Side::right);
}

std::optional<Element> idempotent_generator(const FiniteRing& ring, const Subgroup& ideal,
                                            Side side) {
  if (auto bad = ideal_violation(ring, ideal, side)) {
    throw ValidationError("NotAnIdeal", {bad->first, bad->second});
  }
  for (Element u : ideal.members()) {
    if (ring.mul(u, u) != u) continue;
    const Element gen[] = {u};
    if (one_sided_ideal(ring, gen, side) == ideal) {
      if (product_ideal(ring, gen, side) != ideal) {
        throw std::logic_error("idempotent-generated ideal differs from T*u");
      }
      return u;
    }
  }
  return std::nullopt;
}

RegularityWitness is_von_neumann_regular(const FiniteRing& ring) {
  RegularityWitness w;
  w.holds = true;
  for (Element r = 0; r < ring.order(); ++r) {
    std::optional<Element> found;
    for (Element y = 0; y < ring.order() && !found; ++y) {
      if (ring.mul(ring.mul(r, y), r) == r) found = y;
    }
    if (!found) {
      w.holds = false;
      w.failing = r;
      w.quasi_inverse.clear();
      return w;
    }
    w.quasi_inverse.emplace_back(r, *found);
  }
  return w;
}

FiniteRing opposite_ring(const FiniteRing& ring) {
  const std::size_t n = ring.order();
  std::vector<Element> mul(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) mul[a * n + b] = ring.mul(b, a);
  }
  return validate_ring(ring.additive(), std::move(mul));
}

Subring restrict_to_subring(const FiniteRing& ring, const Subgroup& members) {
  const auto& elems = members.members();
  const std::size_t k = elems.size();
  std::vector<Element> index(ring.order(), kAbsent);
  for (Element i = 0; i < k; ++i) index[elems[i]] = i;
  std::vector<Element> add(k * k), neg(k), mul(k * k);
  for (Element i = 0; i < k; ++i) {
    const Element ni = index[ring.neg(elems[i])];
    if (ni == kAbsent) throw Error("subring: not closed under negation");
    neg[i] = ni;
    for (Element j = 0; j < k; ++j) {
      const Element s = index[ring.add(elems[i], elems[j])];
      const Element p = index[ring.mul(elems[i], elems[j])];
      if (s == kAbsent) throw Error("subring: not closed under addition");
      if (p == kAbsent) throw Error("subring: not closed under multiplication");
      add[i * k + j] = s;
      mul[i * k + j] = p;
    }
  }
  return {validate_ring(validate_additive_group(k, std::move(add), std::move(neg)), std::move(mul)),
          elems};
}

Subring generated_subring(const FiniteRing& ring, std::span<const Element> generators) {
  Subgroup current = additive_closure(ring.additive(), generators);
  while (true) {
    std::vector<Element> seeds = current.members();
    for (Element a : current.members()) {
      for (Element b : current.members()) seeds.push_back(ring.mul(a, b));
    }
    Subgroup next = additive_closure(ring.additive(), seeds);
    if (next == current) break;
    current = std::move(next);
  }
  return restrict_to_subring(ring, current);
}

namespace {

// Every ideal on at most `bound` distinct generators is idempotent-generated.
// Returns the generators of the first counterexample.
std::optional<std::vector<Element>> fg_counterexample(const FiniteRing& ring, std::size_t bound,
                                                      Side side) {
  std::map<std::vector<Element>, bool> seen;
  std::vector<Element> pick;
  std::optional<std::vector<Element>> bad;
  const std::size_t n = ring.order();
  auto visit = [&](auto&& self, Element start) -> void {
    if (bad) return;
    if (!pick.empty()) {
      const Subgroup ideal = one_sided_ideal(ring, pick, side);
      auto [it, fresh] = seen.try_emplace(ideal.members(), false);
      if (fresh) it->second = idempotent_generator(ring, ideal, side).has_value();
      if (!it->second) {
        bad = pick;
        return;
      }
    }
    if (pick.size() == bound) return;
    for (Element c = start; c < n && !bad; ++c) {
      pick.push_back(c);
      self(self, c + 1);
      pick.pop_back();
    }
  };
  visit(visit, 0);
  return bad;
}

}  // namespace

VnrCharacterization check_vnr_characterization(const FiniteRing& ring, std::size_t ideal_bound) {
  VnrCharacterization out;
  out.ideal_bound = ideal_bound;
  out.precondition_met = is_s_unital(ring);
  if (!out.precondition_met) return out;

  const auto brute = is_von_neumann_regular(ring);
  out.von_neumann_regular = brute.holds;
  out.failing_element = brute.failing;

  // Right ideals of T are the left ideals of the opposite ring.
  const FiniteRing opposite = opposite_ring(ring);
  for (const FiniteRing* t : {&ring, &opposite}) {
    bool principal = true;
    for (Element c = 0; c < t->order() && principal; ++c) {
      const Element gen[] = {c};
      principal = idempotent_generator(*t, left_ideal(*t, gen)).has_value();
    }
    auto counter = fg_counterexample(*t, std::max<std::size_t>(ideal_bound, 1), Side::left);
    if (t == &ring) {
      out.left_principal = principal;
      out.left_finitely_generated = !counter;
      out.left_counterexample = counter;
    } else {
      out.right_principal = principal;
      out.right_finitely_generated = !counter;
      out.right_counterexample = counter;
    }
  }
  return out;
}

}  // namespace grl
