#include "wilf/bounds.hpp"

#include "wilf/errors.hpp"

#include <string>
#include <vector>

namespace wilf {

BoundEvaluation evaluate_bounds(const NumericalSemigroup& sg) {
    if (sg.is_degenerate())
        throw DegenerateSemigroupError("bounds undefined for the full semigroup N");

    const Int c = sg.conductor();
    const Int cp = sg.c_prime();
    const Int e = sg.embedding_dimension();
    const Int m = sg.multiplicity();
    const Int t = sg.pseudo_frobenius().type;

    BoundEvaluation be;
    be.wilf_quotient = Rational(cp, c);
    be.wilf_holds = cp * e >= c;
    be.is_wilf_equality = cp * e == c;
    be.theorem1_bound = Rational(c, e) - Rational((m - 1) * (e - 2), 2 * e);
    be.theorem1_holds = 2 * e * cp >= 2 * c - (m - 1) * (e - 2);
    be.type_bound_holds = cp * (t + 1) >= c;
    return be;
}

NumericalSemigroup equality_family(Int k, Int n) {
    if (k < 2) throw std::invalid_argument("equality_family: k must be at least 2");
    if (n < 1) throw std::invalid_argument("equality_family: n must be at least 1");

    std::vector<Int> gens;
    gens.push_back(k);
    for (Int j = 1; j < k; ++j) gens.push_back(n * k + j);
    NumericalSemigroup sg = NumericalSemigroup::from_generators(gens);

    // <k, nk+1, ..., nk+k-1> always lands on e = k, c' = n, c = nk.
    if (sg.embedding_dimension() != k || sg.c_prime() != n || sg.conductor() != n * k)
        throw std::logic_error("equality_family: constructed invariants disagree with the sieve");
    return sg;
}

Rational conductor_ceiling(Int k, const Rational& eps) {
    if (k < 1) throw std::invalid_argument("conductor_ceiling: k must be at least 1");
    if (eps <= Rational(0)) throw std::invalid_argument("conductor_ceiling: eps must be positive");
    return rational_pow(Rational(2) / eps, k);
}

bool conductor_bound_holds(const NumericalSemigroup& sg, const Rational& eps) {
    if (sg.is_degenerate())
        throw DegenerateSemigroupError("conductor bound undefined for the full semigroup N");
    if (eps <= Rational(0))
        throw std::invalid_argument("conductor_bound_holds: eps must be positive");
    if (Rational(sg.multiplicity(), sg.conductor()) <= eps) return true;  // vacuous
    return Rational(sg.conductor()) <= conductor_ceiling(sg.embedding_dimension(), eps);
}

Rational epsilon_prime(Int k, const Rational& eps) {
    if (k <= 2) throw InvalidKError("epsilon_prime requires k > 2");
    if (eps <= Rational(0)) throw std::invalid_argument("epsilon_prime: eps must be positive");
    return Rational(2 * k, k - 2) * eps;
}

}  // namespace wilf
