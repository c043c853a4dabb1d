#pragma once

// Finite semigroups given by Cayley tables, with idempotents, weak inverses
// Q(s) = {x : s = sxs} and inverses V(s) = {x : s = sxs, x = xsx}.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grl {

/// Elements of every finite structure are dense indices 0..n-1.
using Element = std::uint32_t;

class FiniteSemigroup {
 public:
  std::size_t order() const noexcept { return order_; }

  Element product(Element a, Element b) const noexcept {
    return table_[a * order_ + b];
  }

  std::span<const Element> table() const noexcept { return table_; }
  std::vector<std::vector<Element>> rows() const;

  /// Empty when no display labels were supplied.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Element a) const;

  bool operator==(const FiniteSemigroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  friend FiniteSemigroup validate_semigroup(std::size_t, std::vector<Element>,
                                            std::vector<std::string>);

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<std::string> labels_;
};

/// Scans triples (a,b,c) in lexicographic order and returns the first with
/// (ab)c != a(bc). `table` is row-major and must already be in range.
std::optional<std::array<Element, 3>> find_associativity_violation(
    std::size_t order, std::span<const Element> table);

/// Throws ValidationError: OutOfRange(a,b), NotAssociative(a,b,c), or
/// BadShape / BadLabels for malformed input.
FiniteSemigroup validate_semigroup(std::size_t order, std::vector<Element> table,
                                   std::vector<std::string> labels = {});
FiniteSemigroup validate_semigroup(const std::vector<std::vector<Element>>& rows,
                                   std::vector<std::string> labels = {});

std::vector<Element> idempotents(const FiniteSemigroup& s);
std::vector<Element> weak_inverses(const FiniteSemigroup& s, Element x);
std::vector<Element> inverses(const FiniteSemigroup& s, Element x);
std::optional<Element> identity_element(const FiniteSemigroup& s);

struct SemigroupClassification {
  std::vector<Element> idempotents;
  std::vector<std::vector<Element>> weak_inverse_sets;
  std::vector<std::vector<Element>> inverse_sets;
  std::optional<Element> identity;
  bool is_regular = false;
  bool is_inverse = false;
  bool is_group = false;
};

SemigroupClassification classify_semigroup(const FiniteSemigroup& s);

/// The unique inverse of `x`; throws Error unless |V(x)| = 1.
Element unique_inverse(const FiniteSemigroup& s, Element x);

// Named families.
FiniteSemigroup left_zero_semigroup(std::size_t n);
FiniteSemigroup right_zero_semigroup(std::size_t n);
FiniteSemigroup cyclic_group(std::size_t n);
/// {0 < 1 < ... < n-1} under min.
FiniteSemigroup chain_semilattice(std::size_t n);
/// <a | a^(index+period) = a^index>; element k is a^(k+1).
FiniteSemigroup monogenic_semigroup(std::size_t index, std::size_t period);
FiniteSemigroup null_semigroup(std::size_t n);

/// Every associative table of the given order (raw tables scanned
/// exhaustively, so only practical for order <= 3). `raw_count` receives the
/// number of candidate tables examined.
std::vector<FiniteSemigroup> all_semigroups(std::size_t order,
                                            std::uint64_t* raw_count = nullptr);

/// Rejection sampling of uniformly random raw tables; deterministic in `seed`.
/// `attempts` receives the number of raw tables drawn.
std::vector<FiniteSemigroup> sample_semigroups(std::size_t order,
                                               std::size_t count,
                                               std::uint64_t seed,
                                               std::uint64_t* attempts = nullptr);

}  // namespace grl
