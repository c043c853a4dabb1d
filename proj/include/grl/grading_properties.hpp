#pragma once

// Grading classifiers. Each predicate is decided by brute force over
// homogeneous elements and component subgroups; where two characterizations
// of the same property exist they are computed by separate routines.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grl/graded_ring.hpp"

namespace grl {

/// The zero ring {0} counts as unital (0 is its unity). Every unitality
/// decision on product subgroups goes through `subring_unity`, so flipping
/// this constant flips the convention everywhere.
inline constexpr bool kZeroRingIsUnital = true;

std::optional<Element> subring_unity(const FiniteRing& ring);

struct PairVerdict {
  bool holds = false;
  bool vacuous = false;
  std::optional<std::pair<Element, Element>> failing;
  std::string reason;
};

/// R_s = R_s R_t R_s for all s and t in V(s).
PairVerdict is_symmetric(const GradedRing& r);
/// R_s R_t = R_st for all (composable) s, t.
PairVerdict is_strong(const GradedRing& r);

struct UniformEpsilon {
  Element s, t;
  Element eps;        // in R_s R_t (an element of R_st)
  Element eps_prime;  // in R_t R_s (an element of R_ts)
};

struct LocalEpsilon {
  Element s, t, r;
  Element eps;
  Element eps_prime;
};

struct EpsilonWitness {
  enum class Kind { uniform, per_element };
  Kind kind = Kind::uniform;
  std::vector<UniformEpsilon> uniform;
  std::vector<LocalEpsilon> local;
};

struct EpsilonVerdict {
  bool holds = false;
  bool vacuous = false;
  bool symmetric = false;
  std::optional<std::pair<Element, Element>> failing;
  std::optional<Element> failing_element;  // per-element routes only
  std::string reason;
  EpsilonWitness witness;
};

/// Definition: symmetric, and every R_s R_t (t in V(s)) is a unital ring.
/// The witness holds the unities of R_s R_t and R_t R_s.
EpsilonVerdict is_epsilon_strong(const GradedRing& r);

/// Definition: symmetric, and every R_s R_t (t in V(s)) is s-unital. The
/// per-element witness is built from a decomposition r = sum a_i b_i c_i and
/// common units of {a_i b_i} in R_s R_t and of {b_i c_i} in R_t R_s.
EpsilonVerdict is_nearly_epsilon_strong(const GradedRing& r);

/// Element form: for all s, t in V(s) there are eps in R_s R_t and eps' in
/// R_t R_s with eps r = r = r eps' for every r in R_s.
EpsilonVerdict epsilon_strong_by_elements(const GradedRing& r);

/// Element form, per r: eps(r) in R_s R_t, eps'(r) in R_t R_s with
/// eps(r) r = r = r eps'(r).
EpsilonVerdict nearly_epsilon_strong_by_elements(const GradedRing& r);

struct GradedVnrTriple {
  Element s, r, t, y;
};

struct GradedVnrWitness {
  bool holds = false;
  bool vacuous = false;
  std::vector<GradedVnrTriple> triples;
  std::optional<std::array<Element, 3>> failing;  // (s, r, t)
};

/// For all s, r in R_s and t in V(s) there is y in R_t with r = ryr.
GradedVnrWitness is_graded_vnr(const GradedRing& r);

/// For all s and r in R_s there are some t in V(s) and y in R_t with r = ryr.
/// `failing` carries (s, r, s) when no t works.
GradedVnrWitness graded_vnr_some_inverse(const GradedRing& r);

/// r in rRr for every homogeneous r, where rRr is the sum over all base
/// elements h of the subgroups r R_h r (no use of inverses).
GradedVnrWitness homogeneous_regular(const GradedRing& r);

struct ComponentVerdict {
  bool holds = false;
  std::optional<Element> failing;
  std::vector<std::pair<Element, RegularityWitness>> witnesses;
};

/// R_e von Neumann regular for every e in E(S) (identities for a groupoid).
ComponentVerdict base_components_vnr(const GradedRing& r);
/// R_e s-unital for every e in E(S).
ComponentVerdict base_components_s_unital(const GradedRing& r);

}  // namespace grl
