#pragma once

// Rings graded by a finite semigroup or a finite groupoid, stored as one
// additive group per base element plus bilinear product tables
// R_s x R_t -> R_st. The total ring is never materialized.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "grl/groupoid.hpp"
#include "grl/ring.hpp"
#include "grl/semigroup.hpp"

namespace grl {

/// The grading base: either a semigroup (total product) or a groupoid
/// (product defined on composable pairs only).
class GradingBase {
 public:
  explicit GradingBase(FiniteSemigroup s);
  explicit GradingBase(FiniteGroupoid g);

  bool is_groupoid() const noexcept { return std::holds_alternative<FiniteGroupoid>(base_); }
  const FiniteSemigroup* semigroup() const noexcept { return std::get_if<FiniteSemigroup>(&base_); }
  const FiniteGroupoid* groupoid() const noexcept { return std::get_if<FiniteGroupoid>(&base_); }

  std::size_t size() const noexcept { return size_; }
  std::optional<Element> product(Element s, Element t) const;

  /// Pairs (s, t) with t in V(s); for a groupoid base, (g, g^-1).
  const std::vector<std::pair<Element, Element>>& inverse_pairs() const noexcept {
    return inverse_pairs_;
  }
  /// E(S), or the identity morphisms of ob(G).
  const std::vector<Element>& idempotents() const noexcept { return idempotents_; }
  /// Only meaningful for semigroup bases; a groupoid base is always "inverse".
  bool is_inverse() const noexcept { return is_inverse_; }

  std::string label(Element s) const;

  bool operator==(const GradingBase& other) const { return base_ == other.base_; }

 private:
  std::variant<FiniteSemigroup, FiniteGroupoid> base_;
  std::size_t size_ = 0;
  std::vector<std::pair<Element, Element>> inverse_pairs_;
  std::vector<Element> idempotents_;
  bool is_inverse_ = false;
};

/// Row-major |R_s| x |R_t| table with entries in R_st.
using ProductTable = std::vector<Element>;

/// Unvalidated grading. Missing product entries denote the zero map;
/// all-zero tables are dropped during validation.
struct RawGrading {
  GradingBase base;
  std::vector<FiniteAdditiveGroup> components;
  std::map<std::pair<Element, Element>, ProductTable> products;
};

class GradedRing {
 public:
  const GradingBase& base() const noexcept { return base_; }
  const FiniteAdditiveGroup& component(Element s) const { return components_[s]; }
  const std::vector<FiniteAdditiveGroup>& components() const noexcept { return components_; }

  /// nullptr when the product R_s R_t is the zero map.
  const ProductTable* product_table(Element s, Element t) const {
    const ProductTable& p = tables_[s * base_.size() + t];
    return p.empty() ? nullptr : &p;
  }
  /// The pairs (s, t) carrying a stored table, ascending.
  std::vector<std::pair<Element, Element>> product_pairs() const;

  /// a*b for a in R_s, b in R_t; lands in R_st. Requires st to be defined.
  Element multiply(Element s, Element a, Element t, Element b) const {
    const ProductTable* p = product_table(s, t);
    return p ? (*p)[a * components_[t].order() + b] : Element{0};
  }

  /// R_e as a ring; e must be an idempotent of the base.
  const FiniteRing& component_ring(Element e) const;

  bool operator==(const GradedRing& other) const {
    return base_ == other.base_ && components_ == other.components_ &&
           tables_ == other.tables_;
  }

 private:
  friend GradedRing validate_grading(RawGrading raw);
  explicit GradedRing(GradingBase base) : base_(std::move(base)) {}

  GradingBase base_;
  std::vector<FiniteAdditiveGroup> components_;
  std::vector<ProductTable> tables_;  // s * |base| + t; empty means zero map
  std::vector<std::optional<FiniteRing>> component_rings_;
};

/// Throws ValidationError: BadShape, NonComposableProductPresent(s,t),
/// CodomainViolation(s,t,a,b), BilinearityViolation(s,t,a,b,c),
/// AssociativityViolation(s,t,u,a,b,c).
GradedRing validate_grading(RawGrading raw);

/// Additive closure of {ab : a in R_s, b in R_t} inside R_st. For t in V(s)
/// also asserts the result is a two-sided ideal of R_st.
Subgroup product_subgroup(const GradedRing& r, Element s, Element t);

/// Additive closure of {abc : a, c in R_s, b in R_t} inside R_sts.
Subgroup triple_product_subgroup(const GradedRing& r, Element s, Element t);

/// Reindexes the regraded ring over S(G): component 0 is {0}, morphism g
/// moves to g + 1, products on non-composable pairs stay zero.
GradedRing regrade_groupoid_to_semigroup(const GradedRing& r);

}  // namespace grl
