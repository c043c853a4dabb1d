#pragma once

// Builders for the standard example classes: semigroup rings A[S], the
// matrix-unit grading of M_n(A) by B_n, good gradings of M_n(A) by an
// inverse semigroup, and groupoid rings.

#include <cstddef>
#include <vector>

#include "grl/graded_ring.hpp"
#include "grl/report.hpp"

namespace grl {

/// A[S] with (A[S])_s = A delta_s.
GradedRing semigroup_ring(const FiniteRing& a, const FiniteSemigroup& s);

/// B_n = {0} + {e_ij}; e_ij sits at index 1 + (i-1)n + (j-1).
FiniteSemigroup matrix_units_semigroup(std::size_t n);
Element matrix_unit_index(std::size_t n, std::size_t i, std::size_t j);  // 1-based i, j

/// M_n(A) graded by B_n: R_0 = {0}, R_eij = A e_ij.
GradedRing matrix_bn_grading(const FiniteRing& a, std::size_t n);

/// deg(i, j) for 0-based i, j, stored row-major.
struct DegreeMap {
  std::size_t n = 0;
  std::vector<Element> deg;

  Element at(std::size_t i, std::size_t j) const { return deg[i * n + j]; }
};

/// Checks goodness (NotGood), diagonal idempotency (DiagonalNotIdempotent),
/// the opposite-degree law (OppositeDegreeViolation) and
/// deg(i,j)deg(j,k) = deg(i,k) (IncompatibleDegrees), in that order. The
/// base must be an inverse semigroup (NotInverseBase otherwise). Witnesses
/// are 1-based matrix indices.
DegreeMap validate_degree_map(const FiniteSemigroup& base,
                              const std::vector<std::vector<Element>>& deg);

/// Matrix units of M_n(A) in R_s, row-major. Component elements are
/// coefficient tuples over these positions, first position most significant.
std::vector<std::pair<std::size_t, std::size_t>> degree_positions(const DegreeMap& deg, Element s);

GradedRing good_grading(const FiniteRing& a, const FiniteSemigroup& base, const DegreeMap& deg);

/// Diagonal-form hypothesis on every R_e, epsilon-strongness, and graded
/// regularity iff regularity of A. HypothesisFailed is reported as skipped.
CheckReport check_good_grading_prop(const FiniteRing& a, const FiniteSemigroup& base,
                                    const DegreeMap& deg);

/// A[S] is strong, and when A is s-unital and E(S) is nonempty,
/// graded-regular iff A is von Neumann regular.
CheckReport check_semigroup_ring_prop(const FiniteRing& a, const FiniteSemigroup& s);

/// R_g = A delta_g per morphism; products only on composable pairs.
GradedRing groupoid_ring(const FiniteRing& a, const FiniteGroupoid& g);

/// Components are copies of A's additive group and every product is zero.
GradedRing zero_product_grading(const FiniteAdditiveGroup& a, GradingBase base);

}  // namespace grl
