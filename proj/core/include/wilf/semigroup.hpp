#pragma once

// Numerical semigroups: cofinite additive submonoids of the natural numbers.
//
// For a semigroup L with multiplicity m (least nonzero element) and
// conductor c (least n with [n, inf) contained in L), the library tracks
//   c'    = #{x in L : x < c}          (small elements)
//   genus = #(N \ L) = c - c'          (gaps)
//   A(L)  = per-residue minima mod m   (Apery set, a_0 = 0)
// and the pseudo-Frobenius set {x gap : x + l in L for all nonzero l in L}.
//
// Membership is materialized as a boolean table of size c + 2m filled by
// forward propagation over the generators; every query above the table is
// answered by n >= c.

#include "wilf/types.hpp"

#include <initializer_list>
#include <span>
#include <vector>

namespace wilf {

class NumericalSemigroup;

namespace detail {
// Builds every field from a membership table. `table[n]` must be correct for
// 0 <= n < conductor + 2*multiplicity and table.size() must be exactly that.
NumericalSemigroup adopt_table(std::vector<bool> table, Int conductor);
}  // namespace detail

// Apery set of L with respect to its multiplicity m: entries[i] is the least
// member congruent to i mod m. entries[0] == 0 and each entries[i] - m is a
// gap; when L != N, max(entries) == conductor - 1 + m.
struct AperySet {
    std::vector<Int> entries;

    bool operator==(const AperySet&) const = default;
};

// Pseudo-Frobenius numbers and their count (the type of the semigroup).
struct TypeData {
    std::vector<Int> pseudo_frobenius;  // ascending
    Int type = 0;                       // == pseudo_frobenius.size()

    bool operator==(const TypeData&) const = default;
};

class NumericalSemigroup {
  public:
    // Value-initialized semigroup is N (multiplicity 1, conductor 0).
    NumericalSemigroup() = default;

    // Canonical constructor: the semigroup generated by `gens`.
    // Throws std::invalid_argument on an empty list or non-positive entries,
    // NotCofiniteError when gcd(gens) != 1.
    static NumericalSemigroup from_generators(std::span<const Int> gens);
    static NumericalSemigroup from_generators(std::initializer_list<Int> gens);

    // Unique minimal generating set, ascending. Its size is the embedding
    // dimension; its least element is the multiplicity.
    const std::vector<Int>& minimal_generators() const { return minimal_generators_; }
    Int multiplicity() const { return multiplicity_; }
    Int embedding_dimension() const { return static_cast<Int>(minimal_generators_.size()); }

    Int conductor() const { return conductor_; }
    Int frobenius_number() const { return conductor_ - 1; }  // -1 for N

    // Members below the conductor, ascending; c' is their count.
    const std::vector<Int>& small_elements() const { return small_elements_; }
    Int c_prime() const { return static_cast<Int>(small_elements_.size()); }

    // Non-members, ascending; the genus is their count and equals c - c'.
    const std::vector<Int>& gaps() const { return gaps_; }
    Int genus() const { return static_cast<Int>(gaps_.size()); }

    bool is_member(Int n) const {
        if (n < 0) return false;
        if (n >= conductor_) return true;
        return table_[static_cast<std::size_t>(n)];
    }

    // True exactly for the full semigroup N (conductor 0).
    bool is_degenerate() const { return conductor_ == 0; }

    AperySet apery_set() const;
    TypeData pseudo_frobenius() const;  // throws DegenerateSemigroupError on N

    bool operator==(const NumericalSemigroup& other) const {
        return minimal_generators_ == other.minimal_generators_;
    }

  private:
    friend NumericalSemigroup detail::adopt_table(std::vector<bool>, Int);

    std::vector<Int> minimal_generators_{1};
    std::vector<Int> small_elements_;
    std::vector<Int> gaps_;
    std::vector<bool> table_{true, true};  // membership for [0, c + 2m)
    Int multiplicity_ = 1;
    Int conductor_ = 0;
};

// c' recomputed through the Apery set:
//   c' = (m - 1)/2 + sum_i (c - a_i)/m
// as an exact rational (it always reduces to an integer; the direct count
// c_prime() is the independent cross-check). Throws DegenerateSemigroupError
// on N.
Rational c_prime_apery(const NumericalSemigroup& sg);

}  // namespace wilf
