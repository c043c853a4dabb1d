#include "grl/semigroup.hpp"

#include <random>

#include "grl/error.hpp"

namespace grl {

std::vector<std::vector<Element>> FiniteSemigroup::rows() const {
  std::vector<std::vector<Element>> out(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    out[a].assign(table_.begin() + a * order_, table_.begin() + (a + 1) * order_);
  }
  return out;
}

std::string FiniteSemigroup::label(Element a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

std::optional<std::array<Element, 3>> find_associativity_violation(
    std::size_t n, std::span<const Element> t) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = t[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
          return std::array<Element, 3>{Element(a), Element(b), Element(c)};
        }
      }
    }
  }
  return std::nullopt;
}

FiniteSemigroup validate_semigroup(std::size_t order, std::vector<Element> table,
                                   std::vector<std::string> labels) {
  if (order == 0) throw ValidationError("BadShape", {0}, "order must be positive");
  if (table.size() != order * order) {
    throw ValidationError("BadShape", {table.size()}, "table must be order x order");
  }
  if (!labels.empty() && labels.size() != order) {
    throw ValidationError("BadLabels", {labels.size()});
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= order) {
      throw ValidationError("OutOfRange", {i / order, i % order},
                            "entry " + std::to_string(table[i]));
    }
  }
  if (auto bad = find_associativity_violation(order, table)) {
    throw ValidationError("NotAssociative", {(*bad)[0], (*bad)[1], (*bad)[2]});
  }
  FiniteSemigroup s;
  s.order_ = order;
  s.table_ = std::move(table);
  s.labels_ = std::move(labels);
  return s;
}

FiniteSemigroup validate_semigroup(const std::vector<std::vector<Element>>& rows,
                                   std::vector<std::string> labels) {
  const std::size_t n = rows.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) {
      throw ValidationError("BadShape", {a}, "row length differs from order");
    }
    flat.insert(flat.end(), rows[a].begin(), rows[a].end());
  }
  return validate_semigroup(n, std::move(flat), std::move(labels));
}

std::vector<Element> idempotents(const FiniteSemigroup& s) {
  std::vector<Element> out;
  for (Element e = 0; e < s.order(); ++e) {
    if (s.product(e, e) == e) out.push_back(e);
  }
  return out;
}

std::vector<Element> weak_inverses(const FiniteSemigroup& s, Element x) {
  std::vector<Element> out;
  for (Element y = 0; y < s.order(); ++y) {
    if (s.product(s.product(x, y), x) == x) out.push_back(y);
  }
  return out;
}

std::vector<Element> inverses(const FiniteSemigroup& s, Element x) {
  std::vector<Element> out;
  for (Element y = 0; y < s.order(); ++y) {
    if (s.product(s.product(x, y), x) == x && s.product(s.product(y, x), y) == y) {
      out.push_back(y);
    }
  }
  return out;
}

std::optional<Element> identity_element(const FiniteSemigroup& s) {
  for (Element e = 0; e < s.order(); ++e) {
    bool ok = true;
    for (Element x = 0; x < s.order() && ok; ++x) {
      ok = s.product(e, x) == x && s.product(x, e) == x;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

SemigroupClassification classify_semigroup(const FiniteSemigroup& s) {
  SemigroupClassification c;
  c.idempotents = idempotents(s);
  c.identity = identity_element(s);
  c.is_regular = true;
  c.is_inverse = true;
  for (Element x = 0; x < s.order(); ++x) {
    c.weak_inverse_sets.push_back(weak_inverses(s, x));
    c.inverse_sets.push_back(inverses(s, x));
    c.is_regular = c.is_regular && !c.weak_inverse_sets.back().empty();
    c.is_inverse = c.is_inverse && c.inverse_sets.back().size() == 1;
  }
  if (c.identity) {
    const Element e = *c.identity;
    c.is_group = true;
    for (Element x = 0; x < s.order() && c.is_group; ++x) {
      bool invertible = false;
      for (Element y = 0; y < s.order() && !invertible; ++y) {
        invertible = s.product(x, y) == e && s.product(y, x) == e;
      }
      c.is_group = invertible;
    }
  }
  return c;
}

Element unique_inverse(const FiniteSemigroup& s, Element x) {
  auto v = inverses(s, x);
  if (v.size() != 1) {
    throw Error("element " + std::to_string(x) + " has " +
                std::to_string(v.size()) + " inverses, expected exactly one");
  }
  return v.front();
}

namespace {

template <class F>
FiniteSemigroup from_rule(std::size_t n, F rule) {
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = rule(a, b);
  }
  return validate_semigroup(n, std::move(table));
}

}  // namespace

FiniteSemigroup left_zero_semigroup(std::size_t n) {
  return from_rule(n, [](std::size_t a, std::size_t) { return Element(a); });
}

FiniteSemigroup right_zero_semigroup(std::size_t n) {
  return from_rule(n, [](std::size_t, std::size_t b) { return Element(b); });
}

FiniteSemigroup cyclic_group(std::size_t n) {
  return from_rule(n, [n](std::size_t a, std::size_t b) { return Element((a + b) % n); });
}

FiniteSemigroup chain_semilattice(std::size_t n) {
  return from_rule(n, [](std::size_t a, std::size_t b) { return Element(std::min(a, b)); });
}

FiniteSemigroup monogenic_semigroup(std::size_t index, std::size_t period) {
  if (index == 0 || period == 0) throw Error("monogenic semigroup needs index, period >= 1");
  const std::size_t n = index + period - 1;
  // a^k for k >= index is reduced into the cycle [index, index + period).
  auto reduce = [index, period](std::size_t k) {
    return k < index ? k : index + (k - index) % period;
  };
  return from_rule(n, [&](std::size_t a, std::size_t b) {
    return Element(reduce((a + 1) + (b + 1)) - 1);
  });
}

FiniteSemigroup null_semigroup(std::size_t n) {
  return from_rule(n, [](std::size_t, std::size_t) { return Element(0); });
}

std::vector<FiniteSemigroup> all_semigroups(std::size_t order, std::uint64_t* raw_count) {
  std::vector<FiniteSemigroup> out;
  const std::size_t cells = order * order;
  std::vector<Element> table(cells, 0);
  std::uint64_t count = 0;
  if (order == 0) {
    if (raw_count) *raw_count = 0;
    return out;
  }
  // Odometer over all order^(order^2) tables, last cell fastest.
  while (true) {
    ++count;
    if (!find_associativity_violation(order, table)) {
      out.push_back(validate_semigroup(order, table));
    }
    std::size_t i = cells;
    while (i > 0) {
      --i;
      if (++table[i] < order) break;
      table[i] = 0;
      if (i == 0) {
        if (raw_count) *raw_count = count;
        return out;
      }
    }
  }
}

std::vector<FiniteSemigroup> sample_semigroups(std::size_t order, std::size_t count,
                                               std::uint64_t seed,
                                               std::uint64_t* attempts) {
  std::vector<FiniteSemigroup> out;
  std::mt19937_64 rng(seed);
  std::vector<Element> table(order * order);
  std::uint64_t drawn = 0;
  while (out.size() < count && order > 0) {
    ++drawn;
    for (std::size_t i = 0; i < table.size(); i += 2) {
      const std::uint64_t bits = rng();
      table[i] = Element(((bits & 0xffffffffu) * order) >> 32);
      if (i + 1 < table.size()) table[i + 1] = Element(((bits >> 32) * order) >> 32);
    }
    if (!find_associativity_violation(order, table)) {
      out.push_back(validate_semigroup(order, table));
    }
  }
  if (attempts) *attempts = drawn;
  return out;
}

}  // namespace grl
