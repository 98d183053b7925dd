#pragma once

// Shared check predicates used by both the sweep machinery and the record
// builder, so the two report identical verdicts. Internal to the library.

#include "wilf/bounds.hpp"
#include "wilf/semigroup.hpp"
#include "wilf/types.hpp"

namespace wilf::detail {

// Apery set invariants for a non-degenerate semigroup: m entries, a_0 = 0,
// entries in their residue classes, each a member whose m-predecessor is a
// gap, all bounded by c + m - 1 with the maximum exactly c - 1 + m.
bool apery_invariants_hold(const NumericalSemigroup& sg);

// The Apery-formula c' agrees with the direct small-element count.
bool c_prime_formula_matches(const NumericalSemigroup& sg);

// apery_factorization_set has m distinct points, passes check_hypotheses,
// and satisfies the down-set inequality.
bool downset_bound_holds_for(const NumericalSemigroup& sg);

// Equality-flag consistency: is_wilf_equality iff the quotient equals 1/e,
// and embedding dimension 2 forces equality.
bool wilf_flags_consistent(const BoundEvaluation& be, Int e);

}  // namespace wilf::detail
