#pragma once

// Weighted down-sets in O^d (O = non-negative integers) and the inequality
//
//     (d + 1) * sum_{s in S} (C - pi(s))  >=  C * |S|
//
// where pi(s) = sum_i s_i * y_i for positive weights y and pi(s) <= C on S,
// provided the complement of S is closed under adding O^d (equivalently:
// S is a down-set, i.e. closed under decrementing any positive coordinate).
// Equality holds for the unit-weight full simplex {x : sum x_i <= C}.
//
// This module is self-contained; semigroups enter only through the
// factorization module, which produces instances of SubsetBoundInstance.

#include "wilf/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace wilf {

using Point = std::vector<Int>;
using PointSet = std::vector<Point>;  // canonical: lexicographically sorted, unique

struct SubsetBoundInstance {
    Int dimension = 0;      // d >= 1
    std::vector<Int> weights;  // size d, all positive
    Int cap = 0;            // C >= 1
    PointSet points;        // the set S, canonical order

    bool operator==(const SubsetBoundInstance&) const = default;
};

Int weighted_value(const SubsetBoundInstance& inst, const Point& p);  // pi(p)

// Sorts and dedupes `points` into canonical form.
void canonicalize(PointSet& points);

struct HypothesisReport {
    enum class Reason { None, BadShape, CapExceeded, MissingPredecessor };

    bool ok = true;
    Reason reason = Reason::None;
    Point witness;        // first offending point in canonical order
    Int coordinate = -1;  // decremented coordinate for MissingPredecessor

    std::string describe() const;
};

// Checks, in canonical point order: every point has d non-negative
// coordinates, pi(point) <= cap, and every single-coordinate decrement stays
// in the set (the down-set condition). Reports the first violation.
HypothesisReport check_hypotheses(const SubsetBoundInstance& inst);

struct InequalityResult {
    Int lhs = 0;  // (d + 1) * sum (C - pi(s))
    Int rhs = 0;  // C * |S|
    bool holds = false;
    bool equality = false;
};

// Evaluates the inequality exactly. Throws HypothesesViolatedError when
// check_hypotheses fails.
InequalityResult downset_inequality(const SubsetBoundInstance& inst);

// The equality witness: unit weights, S = {x in O^d : sum x_i <= C}.
SubsetBoundInstance simplex_equality_case(Int d, Int C);

// Yields every down-set of the box {0..box}^d exactly once (the empty set
// included), each in canonical order. Emission order: subsets grow from the
// empty set, deciding lattice points in lex order with exclusion first.
// Throws GuardExceededError when (box+1)^d > 2^20.
void enumerate_downsets(Int d, Int box, const std::function<void(const PointSet&)>& yield);

}  // namespace wilf
