#pragma once

// Finite groupoids: objects, morphisms with domain d(g) and codomain c(g),
// partial composition gh defined exactly when d(g) = c(h), and inverses.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "grl/semigroup.hpp"

namespace grl {

struct MorphismSpec {
  Element dom = 0;
  Element cod = 0;
  Element inv = 0;
  std::string label;
};

/// Unvalidated groupoid data. `compose` lists triples (g, h, gh); pairs that
/// are not listed are not composable.
struct RawGroupoid {
  std::vector<std::string> objects;
  std::vector<MorphismSpec> morphisms;
  std::vector<std::array<Element, 3>> compose;
};

inline constexpr Element kNotComposable = static_cast<Element>(-1);

class FiniteGroupoid {
 public:
  std::size_t num_objects() const noexcept { return objects_.size(); }
  std::size_t num_morphisms() const noexcept { return morphisms_.size(); }

  Element dom(Element g) const { return morphisms_[g].dom; }
  Element cod(Element g) const { return morphisms_[g].cod; }
  Element inverse(Element g) const { return morphisms_[g].inv; }
  Element identity(Element object) const { return identities_[object]; }

  bool composable(Element g, Element h) const { return dom(g) == cod(h); }
  std::optional<Element> compose(Element g, Element h) const {
    const Element gh = compose_[g * morphisms_.size() + h];
    if (gh == kNotComposable) return std::nullopt;
    return gh;
  }

  const std::vector<std::string>& object_labels() const noexcept { return objects_; }
  std::string morphism_label(Element g) const;

  /// Round-trips to the raw form (compose triples in (g, h) order).
  RawGroupoid raw() const;

  bool operator==(const FiniteGroupoid& other) const {
    return morphisms_.size() == other.morphisms_.size() &&
           objects_.size() == other.objects_.size() && compose_ == other.compose_ &&
           identities_ == other.identities_;
  }

 private:
  friend FiniteGroupoid validate_groupoid(const RawGroupoid&);

  std::vector<std::string> objects_;
  std::vector<MorphismSpec> morphisms_;
  std::vector<Element> compose_;
  std::vector<Element> identities_;
};

/// Checks, in order: ranges (OutOfRange), composition domain and closure
/// (NotComposableClosed), identities (IdentityViolation), inverses
/// (InverseViolation), associativity on composable triples (NotAssociative).
FiniteGroupoid validate_groupoid(const RawGroupoid& raw);

/// S(G) = G + {0}: index 0 is the absorbing zero and morphism g sits at g + 1.
struct GroupoidSemigroup {
  FiniteSemigroup semigroup;
  std::vector<Element> embedding;  // morphism -> semigroup index
};

GroupoidSemigroup to_inverse_semigroup(const FiniteGroupoid& g);

/// One-object groupoid of a finite group; throws Error if `group` is not one.
FiniteGroupoid group_groupoid(const FiniteSemigroup& group);
/// Objects 0..n-1 and one morphism (i,j) : j -> i per pair, stored at index
/// i*n + j, so that (i,j)(j,k) = (i,k) mirrors matrix units.
FiniteGroupoid pair_groupoid(std::size_t n);
FiniteGroupoid trivial_groupoid();
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

}  // namespace grl
