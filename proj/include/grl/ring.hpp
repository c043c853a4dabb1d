#pragma once

// Finite additive groups and finite, possibly non-unital, associative rings
// given by full tables, with the s-unitality, ideal and von Neumann
// regularity machinery used by the graded checks.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grl/semigroup.hpp"

namespace grl {

/// Abelian group on 0..n-1 with identity 0.
class FiniteAdditiveGroup {
 public:
  std::size_t order() const noexcept { return order_; }
  Element add(Element a, Element b) const noexcept { return add_[a * order_ + b]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  static constexpr Element zero() noexcept { return 0; }

  std::span<const Element> add_table() const noexcept { return add_; }
  std::span<const Element> neg_table() const noexcept { return neg_; }

  bool operator==(const FiniteAdditiveGroup&) const = default;

 private:
  friend FiniteAdditiveGroup validate_additive_group(std::size_t, std::vector<Element>,
                                                     std::vector<Element>);
  std::size_t order_ = 0;
  std::vector<Element> add_;
  std::vector<Element> neg_;
};

/// Throws ValidationError: BadShape, OutOfRange, BadZero, NotAssociative,
/// NotCommutative, BadNegation.
FiniteAdditiveGroup validate_additive_group(std::size_t order, std::vector<Element> add,
                                            std::vector<Element> neg);
FiniteAdditiveGroup cyclic_additive_group(std::size_t n);
FiniteAdditiveGroup trivial_additive_group();

class FiniteRing {
 public:
  const FiniteAdditiveGroup& additive() const noexcept { return additive_; }
  std::size_t order() const noexcept { return additive_.order(); }
  Element add(Element a, Element b) const noexcept { return additive_.add(a, b); }
  Element neg(Element a) const noexcept { return additive_.neg(a); }
  Element mul(Element a, Element b) const noexcept { return mul_[a * order() + b]; }
  std::span<const Element> mul_table() const noexcept { return mul_; }

  bool operator==(const FiniteRing&) const = default;

 private:
  friend FiniteRing validate_ring(FiniteAdditiveGroup, std::vector<Element>);
  FiniteAdditiveGroup additive_;
  std::vector<Element> mul_;
};

/// Throws ValidationError: BadShape, OutOfRange, Distributivity(a,b,c),
/// NotAssociative(a,b,c).
FiniteRing validate_ring(FiniteAdditiveGroup additive, std::vector<Element> mul);

/// A subset of a finite additive group, kept as a membership mask plus the
/// ascending member list.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::size_t parent_order, std::span<const Element> members);

  std::size_t parent_order() const noexcept { return mask_.size(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Element x) const noexcept { return x < mask_.size() && mask_[x]; }
  const std::vector<Element>& members() const noexcept { return members_; }
  bool is_trivial() const noexcept { return members_.size() <= 1; }
  bool is_whole() const noexcept { return members_.size() == mask_.size(); }

  bool operator==(const Subgroup&) const = default;

 private:
  std::vector<char> mask_;
  std::vector<Element> members_;
};

/// Smallest subgroup containing `seeds` (worklist saturation).
Subgroup additive_closure(const FiniteAdditiveGroup& group, std::span<const Element> seeds);
Subgroup whole_group(const FiniteAdditiveGroup& group);

/// Indices into `generators` (repetition allowed) whose values sum to
/// `target`, fewest terms first (breadth-first over partial sums). The empty
/// list represents 0; nullopt when target is not in the generated subgroup.
std::optional<std::vector<std::size_t>> express_as_sum(const FiniteAdditiveGroup& group,
                                                       std::span<const Element> generators,
                                                       Element target);

enum class Side { left, right };

/// Per-element unit witnesses: unit[x] satisfies u*x = x (left) or x*u = x
/// (right). `failing` is the first element without one.
struct SUnitality {
  bool holds = false;
  std::vector<std::optional<Element>> unit;
  std::optional<Element> failing;
};

SUnitality is_left_s_unital(const FiniteRing& ring);
SUnitality is_right_s_unital(const FiniteRing& ring);
SUnitality one_sided_s_unital(const FiniteRing& ring, Side side);
bool is_s_unital(const FiniteRing& ring);

std::optional<Element> left_unity(const FiniteRing& ring);
std::optional<Element> right_unity(const FiniteRing& ring);
std::optional<Element> unity(const FiniteRing& ring);

/// First u (ascending) with u*v = v (left) or v*u = v (right) for all v in
/// `targets`.
std::optional<Element> common_unit(const FiniteRing& ring, std::span<const Element> targets,
                                   Side side);

/// Ideal generated by `generators`: additive closure of the generators and
/// all products t*c (left) or c*t (right).
Subgroup left_ideal(const FiniteRing& ring, std::span<const Element> generators);
Subgroup right_ideal(const FiniteRing& ring, std::span<const Element> generators);
Subgroup one_sided_ideal(const FiniteRing& ring, std::span<const Element> generators, Side side);

/// Additive closure of T*generators (left) or generators*T (right), without
/// adjoining the generators themselves.
Subgroup product_ideal(const FiniteRing& ring, std::span<const Element> generators, Side side);

bool is_left_ideal(const FiniteRing& ring, const Subgroup& ideal);
bool is_right_ideal(const FiniteRing& ring, const Subgroup& ideal);

/// First idempotent u in `ideal` whose generated one-sided ideal is `ideal`.
/// Throws ValidationError NotAnIdeal(t, x) if `ideal` is not a subgroup or
/// not absorbing on the requested side.
std::optional<Element> idempotent_generator(const FiniteRing& ring, const Subgroup& ideal,
                                            Side side = Side::left);

struct RegularityWitness {
  bool holds = false;
  std::vector<std::pair<Element, Element>> quasi_inverse;  // (r, y) with r = ryr
  std::optional<Element> failing;
};

RegularityWitness is_von_neumann_regular(const FiniteRing& ring);

FiniteRing opposite_ring(const FiniteRing& ring);

/// A subring given by a subgroup closed under multiplication, reindexed to
/// 0..k-1 in ascending order of the parent elements.
struct Subring {
  FiniteRing ring;
  std::vector<Element> embedding;  // subring index -> parent element
};

/// Throws Error if `members` is not closed under multiplication.
Subring restrict_to_subring(const FiniteRing& ring, const Subgroup& members);
/// Subring generated by `generators` (closure under + and *).
Subring generated_subring(const FiniteRing& ring, std::span<const Element> generators);

struct VnrCharacterization {
  bool precondition_met = false;  // ring is s-unital
  std::size_t ideal_bound = 2;
  bool von_neumann_regular = false;
  bool left_principal = false;
  bool left_finitely_generated = false;
  bool right_principal = false;
  bool right_finitely_generated = false;
  std::optional<Element> failing_element;
  std::optional<std::vector<Element>> left_counterexample;   // generators
  std::optional<std::vector<Element>> right_counterexample;  // generators

  bool agreement() const {
    const bool v = von_neumann_regular;
    return v == left_principal && v == left_finitely_generated && v == right_principal &&
           v == right_finitely_generated;
  }
};

/// Evaluates regularity three ways (brute force, principal ideals, ideals on
/// at most `ideal_bound` generators), on both sides.
VnrCharacterization check_vnr_characterization(const FiniteRing& ring,
                                               std::size_t ideal_bound = 2);

// Named rings.
FiniteRing integers_mod(std::size_t n);
/// Z_n with identically zero multiplication.
FiniteRing zero_multiplication_ring(std::size_t n);
/// GF(4) = F_2[x]/(x^2+x+1); element b0 + 2*b1 is b0 + b1*x.
FiniteRing field_f4();
/// Componentwise product; (a, b) has index a*|B| + b.
FiniteRing product_ring(const FiniteRing& a, const FiniteRing& b);
/// M_k(A), entries row-major, entry (0,0) most significant.
FiniteRing matrix_ring(const FiniteRing& a, std::size_t k);

std::vector<Element> decode_matrix(std::size_t base, std::size_t k, Element index);
Element encode_matrix(std::size_t base, std::span<const Element> entries);

}  // namespace grl
