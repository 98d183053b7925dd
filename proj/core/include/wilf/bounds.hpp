#pragma once

// The quotient c'/c and the exact lower bounds verified per semigroup:
//
//   wilf      c' * e >= c                 (quotient >= 1/e)
//   thm1      c' >= c/e - (m-1)(e-2)/(2e) (main lower bound)
//   type      c' * (t + 1) >= c           (t = number of pseudo-Frobenius)
//
// plus the conductor ceiling: if m/c > eps then c <= (2/eps)^k, and the
// threshold transform eps' = 2*k*eps/(k - 2) for k > 2.
//
// Every comparison is done on cross-multiplied integers; rationals only
// carry results outward.

#include "wilf/semigroup.hpp"
#include "wilf/types.hpp"

namespace wilf {

struct BoundEvaluation {
    Rational wilf_quotient;   // c'/c, lowest terms
    bool wilf_holds = false;
    Rational theorem1_bound;  // c/e - (m-1)(e-2)/(2e)
    bool theorem1_holds = false;
    bool type_bound_holds = false;
    bool is_wilf_equality = false;  // c' * e == c

    bool operator==(const BoundEvaluation&) const = default;
};

// Throws DegenerateSemigroupError on N (the quotient c'/c is undefined).
BoundEvaluation evaluate_bounds(const NumericalSemigroup& sg);

// The family <k, nk+1, ..., nk+k-1> attaining quotient exactly 1/k:
// e = k, c' = n, c = nk (verified internally against the sieve).
// Requires k >= 2, n >= 1.
NumericalSemigroup equality_family(Int k, Int n);

// (2/eps)^k as an exact rational. Requires k >= 1 and eps > 0.
Rational conductor_ceiling(Int k, const Rational& eps);

// True when m/c <= eps or c <= (2/eps)^k with k the embedding dimension.
// Throws DegenerateSemigroupError on N.
bool conductor_bound_holds(const NumericalSemigroup& sg, const Rational& eps);

// eps' = 2*k*eps/(k-2). Throws InvalidKError for k <= 2; requires eps > 0.
Rational epsilon_prime(Int k, const Rational& eps);

}  // namespace wilf
