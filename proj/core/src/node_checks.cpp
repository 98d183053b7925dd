#include "node_checks.hpp"

#include "wilf/factorization.hpp"
#include "wilf/subset_bound.hpp"

#include <algorithm>

namespace wilf::detail {

bool apery_invariants_hold(const NumericalSemigroup& sg) {
    const Int m = sg.multiplicity();
    const Int c = sg.conductor();
    const AperySet ap = sg.apery_set();
    if (static_cast<Int>(ap.entries.size()) != m) return false;
    if (ap.entries[0] != 0) return false;
    for (Int i = 0; i < m; ++i) {
        const Int a = ap.entries[static_cast<std::size_t>(i)];
        if (a % m != i) return false;
        if (!sg.is_member(a)) return false;
        if (sg.is_member(a - m)) return false;
        if (a > c + m - 1) return false;
    }
    if (!sg.is_degenerate() &&
        *std::max_element(ap.entries.begin(), ap.entries.end()) != c - 1 + m)
        return false;
    return true;
}

bool c_prime_formula_matches(const NumericalSemigroup& sg) {
    return c_prime_apery(sg) == Rational(sg.c_prime());
}

bool downset_bound_holds_for(const NumericalSemigroup& sg) {
    const SubsetBoundInstance inst = apery_factorization_set(sg);
    if (static_cast<Int>(inst.points.size()) != sg.multiplicity()) return false;
    if (!check_hypotheses(inst).ok) return false;
    return downset_inequality(inst).holds;
}

bool wilf_flags_consistent(const BoundEvaluation& be, Int e) {
    if (be.is_wilf_equality != (be.wilf_quotient == Rational(1, e))) return false;
    if (e == 2 && !be.is_wilf_equality) return false;
    return true;
}

}  // namespace wilf::detail
