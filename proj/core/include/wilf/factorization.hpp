#pragma once

// Factorizations of semigroup elements over the non-multiplicity generators
// g_2 < ... < g_k: exponent vectors (x_1, ..., x_{k-1}) with
// sum x_i * g_{i+1} = n. The lexicographically minimal factorization treats
// x_1 (the g_2 exponent) as most significant.
//
// The lex-minimal factorizations of the Apery set form a down-set whose
// weighted values stay below C = conductor + multiplicity - 1; that is the
// SubsetBoundInstance consumed by the down-set inequality.

#include "wilf/semigroup.hpp"
#include "wilf/subset_bound.hpp"
#include "wilf/types.hpp"

#include <vector>

namespace wilf {

struct Factorization {
    std::vector<Int> exponents;  // over minimal_generators()[1..]
    Int value = 0;               // the factored element

    bool operator==(const Factorization&) const = default;
};

// Every factorization of n, in ascending lexicographic order. Requires
// embedding dimension >= 2 and n >= 0 (std::invalid_argument otherwise).
// n == 0 yields exactly the zero vector.
std::vector<Factorization> all_factorizations(const NumericalSemigroup& sg, Int n);

// Lexicographically minimal factorization of n, computed greedily: each
// exponent takes the least value whose remainder is representable over the
// remaining generator suffix (decided by a coin-problem table per suffix).
// Throws NotRepresentableError when n has no factorization.
Factorization lex_min_factorization(const NumericalSemigroup& sg, Int n);

// The instance (d = e - 1, weights g_2..g_k, cap c + m - 1, points = lex-min
// factorizations of the Apery set). Its points are pairwise distinct and it
// satisfies check_hypotheses by construction; tests verify both. Throws
// DegenerateSemigroupError on N.
SubsetBoundInstance apery_factorization_set(const NumericalSemigroup& sg);

}  // namespace wilf
