#pragma once

// Cross-checks that evaluate both sides of each characterization by
// separate code paths and report whether they agree.

#include <cstddef>

#include "grl/grading_properties.hpp"
#include "grl/report.hpp"

namespace grl {

json witness_json(const EpsilonWitness& w);
json witness_json(const GradedVnrWitness& w);
json witness_json(const RegularityWitness& w);

/// Q(s) nonempty for all s iff V(s) nonempty for all s; also checks
/// x in V(s) iff s in V(x), and st, ts idempotent for t in V(s).
CheckReport check_q_vs_v(const FiniteSemigroup& s);

/// Regularity by brute force vs principal ideals vs ideals on at most
/// `ideal_bound` generators, both sides; skipped unless s-unital.
CheckReport check_vnr_characterization_report(const FiniteRing& ring, std::size_t ideal_bound = 2);

/// On a left (right) s-unital ring every subset of size <= `max_subset`
/// has a common left (right) unit.
CheckReport check_tominaga(const FiniteRing& ring, std::size_t max_subset = 3);

CheckReport check_eps_characterizations(const GradedRing& r);
CheckReport check_theorem_main(const GradedRing& r);
CheckReport check_lemma_technical(const GradedRing& r);
CheckReport check_theorem_inverse_semigroup(const GradedRing& r);
CheckReport check_corollaries(const GradedRing& r);
CheckReport check_prop_switch(const GradedRing& r);
CheckReport check_theorem_groupoid(const GradedRing& r);

/// Every classifier verdict for one graded ring, with witnesses.
json classify_graded(const GradedRing& r);

}  // namespace grl
