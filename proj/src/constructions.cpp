#include "grl/constructions.hpp"

#include <algorithm>
#include <map>

#include "grl/error.hpp"
#include "grl/grading_properties.hpp"

namespace grl {

namespace {

ProductTable copy_multiplication(const FiniteRing& a) {
  return ProductTable(a.mul_table().begin(), a.mul_table().end());
}

}  // namespace

GradedRing semigroup_ring(const FiniteRing& a, const FiniteSemigroup& s) {
  RawGrading raw{GradingBase(s), std::vector<FiniteAdditiveGroup>(s.order(), a.additive()), {}};
  for (Element x = 0; x < s.order(); ++x) {
    for (Element y = 0; y < s.order(); ++y) raw.products[{x, y}] = copy_multiplication(a);
  }
  return validate_grading(std::move(raw));
}

Element matrix_unit_index(std::size_t n, std::size_t i, std::size_t j) {
  return Element(1 + (i - 1) * n + (j - 1));
}

FiniteSemigroup matrix_units_semigroup(std::size_t n) {
  if (n == 0) throw Error("B_n needs n >= 1");
  const std::size_t order = n * n + 1;
  std::vector<Element> table(order * order, 0);
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      labels.push_back("e" + std::to_string(i) + std::to_string(j));
      for (std::size_t l = 1; l <= n; ++l) {
        // e_ij e_jl = e_il; every other product is 0.
        table[matrix_unit_index(n, i, j) * order + matrix_unit_index(n, j, l)] =
            matrix_unit_index(n, i, l);
      }
    }
  }
  return validate_semigroup(order, std::move(table), std::move(labels));
}

GradedRing matrix_bn_grading(const FiniteRing& a, std::size_t n) {
  const FiniteSemigroup bn = matrix_units_semigroup(n);
  RawGrading raw{GradingBase(bn), {}, {}};
  raw.components.push_back(trivial_additive_group());
  for (std::size_t k = 1; k < bn.order(); ++k) raw.components.push_back(a.additive());
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t l = 1; l <= n; ++l) {
        raw.products[{matrix_unit_index(n, i, j), matrix_unit_index(n, j, l)}] =
            copy_multiplication(a);
      }
    }
  }
  return validate_grading(std::move(raw));
}

DegreeMap validate_degree_map(const FiniteSemigroup& base,
                              const std::vector<std::vector<Element>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw ValidationError("NotGood", {0}, "empty degree map");
  DegreeMap d;
  d.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw ValidationError("NotGood", {i + 1}, "degree map must be n x n");
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] >= base.order()) {
        throw ValidationError("NotGood", {i + 1, j + 1}, "degree outside the base");
      }
      d.deg.push_back(rows[i][j]);
    }
  }
  const auto c = classify_semigroup(base);
  if (!c.is_inverse) throw ValidationError("NotInverseBase", {}, "base must be an inverse semigroup");
  for (std::size_t i = 0; i < n; ++i) {
    const Element s = d.at(i, i);
    if (base.product(s, s) != s) throw ValidationError("DiagonalNotIdempotent", {i + 1, i + 1});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d.at(j, i) != c.inverse_sets[d.at(i, j)].front()) {
        throw ValidationError("OppositeDegreeViolation", {i + 1, j + 1});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (base.product(d.at(i, j), d.at(j, k)) != d.at(i, k)) {
          throw ValidationError("IncompatibleDegrees", {i + 1, j + 1, k + 1});
        }
      }
    }
  }
  return d;
}

std::vector<std::pair<std::size_t, std::size_t>> degree_positions(const DegreeMap& deg, Element s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < deg.n; ++i) {
    for (std::size_t j = 0; j < deg.n; ++j) {
      if (deg.at(i, j) == s) out.emplace_back(i, j);
    }
  }
  return out;
}

namespace {

std::vector<Element> decode_tuple(std::size_t base, std::size_t k, Element index) {
  std::vector<Element> out(k);
  for (std::size_t p = k; p-- > 0;) {
    out[p] = Element(index % base);
    index = Element(index / base);
  }
  return out;
}

// Coefficient tuples over a fixed list of positions.
FiniteAdditiveGroup tuple_group(const FiniteRing& a, std::size_t k) {
  std::size_t order = 1;
  for (std::size_t i = 0; i < k; ++i) order *= a.order();
  if (order > 4096) throw Error("good grading component too large");
  std::vector<Element> add(order * order), neg(order), tmp(k);
  for (Element x = 0; x < order; ++x) {
    const auto dx = decode_tuple(a.order(), k, x);
    for (std::size_t p = 0; p < k; ++p) tmp[p] = a.neg(dx[p]);
    neg[x] = encode_matrix(a.order(), tmp);
    for (Element y = 0; y < order; ++y) {
      const auto dy = decode_tuple(a.order(), k, y);
      for (std::size_t p = 0; p < k; ++p) tmp[p] = a.add(dx[p], dy[p]);
      add[x * order + y] = encode_matrix(a.order(), tmp);
    }
  }
  return validate_additive_group(order, std::move(add), std::move(neg));
}

}  // namespace

GradedRing good_grading(const FiniteRing& a, const FiniteSemigroup& base, const DegreeMap& deg) {
  const std::size_t q = a.order();
  const std::size_t m = base.order();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> positions(m);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;  // position -> index in its component
  for (Element s = 0; s < m; ++s) {
    positions[s] = degree_positions(deg, s);
    for (std::size_t p = 0; p < positions[s].size(); ++p) slot[positions[s][p]] = p;
  }
  RawGrading raw{GradingBase(base), {}, {}};
  std::vector<std::vector<std::vector<Element>>> decoded(m);
  for (Element s = 0; s < m; ++s) {
    raw.components.push_back(tuple_group(a, positions[s].size()));
    const std::size_t order = raw.components.back().order();
    for (Element x = 0; x < order; ++x) {
      decoded[s].push_back(decode_tuple(q, positions[s].size(), x));
    }
  }
  for (Element s = 0; s < m; ++s) {
    for (Element t = 0; t < m; ++t) {
      if (positions[s].empty() || positions[t].empty()) continue;
      const Element st = base.product(s, t);
      const std::size_t ns = decoded[s].size(), nt = decoded[t].size();
      ProductTable table(ns * nt, 0);
      std::vector<Element> acc(positions[st].size());
      for (Element x = 0; x < ns; ++x) {
        for (Element y = 0; y < nt; ++y) {
          std::fill(acc.begin(), acc.end(), 0);
          for (std::size_t p = 0; p < positions[s].size(); ++p) {
            const auto [i, j] = positions[s][p];
            for (std::size_t r = 0; r < positions[t].size(); ++r) {
              const auto [k, l] = positions[t][r];
              if (j != k) continue;
              // Compatibility puts e_il in R_st.
              const std::size_t target = slot.at({i, l});
              acc[target] = a.add(acc[target], a.mul(decoded[s][x][p], decoded[t][y][r]));
            }
          }
          table[x * nt + y] = encode_matrix(q, acc);
        }
      }
      raw.products[{s, t}] = std::move(table);
    }
  }
  return validate_grading(std::move(raw));
}

CheckReport check_good_grading_prop(const FiniteRing& a, const FiniteSemigroup& base,
                                    const DegreeMap& deg) {
  CheckReport rep;
  rep.check = "good-grading";
  if (!unity(a)) {
    rep.skip("coefficient ring is not unital");
    return rep;
  }
  const GradedRing r = good_grading(a, base, deg);
  bool diagonal = true;
  json offending = json::array();
  for (Element e : r.base().idempotents()) {
    for (auto [i, j] : degree_positions(deg, e)) {
      if (i != j) {
        if (diagonal) offending.push_back(e);
        diagonal = false;
        break;
      }
    }
  }
  const auto eps = is_epsilon_strong(r);
  const auto graded = is_graded_vnr(r);
  const bool a_vnr = is_von_neumann_regular(a).holds;
  rep.add("diagonal_hypothesis", diagonal);
  rep.add("epsilon_strong", eps.holds, eps.vacuous);
  rep.add("graded_vnr", graded.holds, graded.vacuous);
  rep.add("coefficient_ring_vnr", a_vnr);
  rep.details = {{"non_diagonal_idempotent_degrees", offending}};
  if (!diagonal) {
    rep.skip("HypothesisFailed: some R_e is not spanned by diagonal matrix units");
    return rep;
  }
  rep.require_equal({"graded_vnr", "coefficient_ring_vnr"});
  rep.agreement = rep.agreement && eps.holds;
  return rep;
}

CheckReport check_semigroup_ring_prop(const FiniteRing& a, const FiniteSemigroup& s) {
  CheckReport rep;
  rep.check = "semigroup-ring";
  if (!is_s_unital(a)) {
    rep.skip("coefficient ring is not s-unital");
    return rep;
  }
  if (idempotents(s).empty()) {
    rep.skip("semigroup has no idempotents");
    return rep;
  }
  const GradedRing r = semigroup_ring(a, s);
  const auto strong = is_strong(r);
  const auto graded = is_graded_vnr(r);
  rep.add("strong", strong.holds);
  rep.add("graded_vnr", graded.holds, graded.vacuous);
  rep.add("coefficient_ring_vnr", is_von_neumann_regular(a).holds);
  rep.require_equal({"graded_vnr", "coefficient_ring_vnr"});
  rep.agreement = rep.agreement && strong.holds;
  return rep;
}

GradedRing groupoid_ring(const FiniteRing& a, const FiniteGroupoid& g) {
  const std::size_t m = g.num_morphisms();
  RawGrading raw{GradingBase(g), std::vector<FiniteAdditiveGroup>(m, a.additive()), {}};
  for (Element x = 0; x < m; ++x) {
    for (Element y = 0; y < m; ++y) {
      if (g.compose(x, y)) raw.products[{x, y}] = copy_multiplication(a);
    }
  }
  return validate_grading(std::move(raw));
}

GradedRing zero_product_grading(const FiniteAdditiveGroup& a, GradingBase base) {
  const std::size_t n = base.size();
  return validate_grading(RawGrading{std::move(base), std::vector<FiniteAdditiveGroup>(n, a), {}});
}

}  // namespace grl
