#include "wilf/bounds.hpp"
#include "wilf/enumeration.hpp"
#include "wilf/errors.hpp"
#include "wilf/semigroup.hpp"

#include <doctest.h>

#include <vector>

using wilf::Int;
using wilf::NumericalSemigroup;
using wilf::Rational;

TEST_SUITE("bounds") {

TEST_CASE("bound evaluation on the worked examples") {
    SUBCASE("<5,7,9>") {
        const auto be = evaluate_bounds(NumericalSemigroup::from_generators({5, 7, 9}));
        CHECK(be.wilf_quotient == Rational(3, 7));  // 6/14 reduced
        CHECK(be.wilf_holds);
        CHECK_FALSE(be.is_wilf_equality);
        CHECK(be.theorem1_bound == Rational(4));  // 14/3 - 4/6
        CHECK(be.theorem1_holds);                 // 6 >= 4
        CHECK(be.type_bound_holds);               // 6*3 >= 14
    }
    SUBCASE("<2,3>") {
        const auto be = evaluate_bounds(NumericalSemigroup::from_generators({2, 3}));
        CHECK(be.wilf_quotient == Rational(1, 2));
        CHECK(be.is_wilf_equality);
        CHECK(be.wilf_holds);
    }
    SUBCASE("<3,7,8>") {
        const auto be = evaluate_bounds(NumericalSemigroup::from_generators({3, 7, 8}));
        CHECK(be.wilf_quotient == Rational(1, 3));  // 2/6 reduced
        CHECK(be.is_wilf_equality);
        CHECK(be.theorem1_bound == Rational(5, 3));  // 6/3 - 2/6
        CHECK(be.theorem1_holds);
    }
    SUBCASE("the full semigroup has no quotient") {
        CHECK_THROWS_AS(evaluate_bounds(NumericalSemigroup::from_generators({1})),
                        wilf::DegenerateSemigroupError);
    }
}

TEST_CASE("equality family reproduces its closed-form invariants") {
    SUBCASE("worked instances") {
        const auto a = wilf::equality_family(3, 2);
        CHECK(a.minimal_generators() == std::vector<Int>{3, 7, 8});
        CHECK(a.conductor() == 6);
        CHECK(a.c_prime() == 2);
        const auto b = wilf::equality_family(2, 1);
        CHECK(b.minimal_generators() == std::vector<Int>{2, 3});
        CHECK(b.conductor() == 2);
        CHECK(b.c_prime() == 1);
        const auto c = wilf::equality_family(4, 3);
        CHECK(c.minimal_generators() == std::vector<Int>{4, 13, 14, 15});
        CHECK(c.conductor() == 12);
        CHECK(c.c_prime() == 3);
    }
    SUBCASE("whole grid: e = k, c' = n, c = nk, quotient exactly 1/k") {
        for (Int k = 2; k <= 10; ++k)
            for (Int n = 1; n <= 10; ++n) {
                CAPTURE(k);
                CAPTURE(n);
                const auto sg = wilf::equality_family(k, n);
                CHECK(sg.embedding_dimension() == k);
                CHECK(sg.c_prime() == n);
                CHECK(sg.conductor() == n * k);
                const auto be = evaluate_bounds(sg);
                CHECK(be.wilf_quotient == Rational(1, k));
                CHECK(be.is_wilf_equality);
            }
    }
    SUBCASE("guards") {
        CHECK_THROWS_AS(wilf::equality_family(1, 5), std::invalid_argument);
        CHECK_THROWS_AS(wilf::equality_family(2, 0), std::invalid_argument);
    }
}

TEST_CASE("conductor ceiling (2/eps)^k") {
    CHECK(wilf::conductor_ceiling(3, Rational(1, 2)) == Rational(64));
    CHECK(wilf::conductor_ceiling(2, Rational(1)) == Rational(4));
    CHECK(wilf::conductor_ceiling(4, Rational(1, 3)) == Rational(1296));
    CHECK(wilf::conductor_ceiling(1, Rational(2, 3)) == Rational(3));
}

TEST_CASE("multiplicity-over-conductor implication") {
    const auto big = NumericalSemigroup::from_generators({5, 7, 9});
    const auto tiny = NumericalSemigroup::from_generators({2, 3});
    SUBCASE("vacuous when m/c <= eps") {
        CHECK(wilf::conductor_bound_holds(big, Rational(1, 2)));  // 5/14 <= 1/2
        CHECK(wilf::conductor_bound_holds(tiny, Rational(10)));
    }
    SUBCASE("binding when m/c > eps") {
        // <2,3>: m/c = 1 > 1/2 and c = 2 <= (2/(1/2))^2 = 16
        CHECK(wilf::conductor_bound_holds(tiny, Rational(1, 2)));
    }
    SUBCASE("degenerate input is an error") {
        CHECK_THROWS_AS(
            wilf::conductor_bound_holds(NumericalSemigroup::from_generators({1}), Rational(1, 2)),
            wilf::DegenerateSemigroupError);
    }
    SUBCASE("holds for every semigroup in a small sweep") {
        wilf::enumerate_by_genus(10, [](const wilf::TreeNode& node) {
            if (node.semigroup.is_degenerate()) return;
            for (const auto& eps : {Rational(1, 2), Rational(1, 3), Rational(1, 4)})
                CHECK(wilf::conductor_bound_holds(node.semigroup, eps));
        });
    }
}

TEST_CASE("epsilon adjustment for the tail argument") {
    CHECK(wilf::epsilon_prime(3, Rational(1, 6)) == Rational(1));  // 2*3*(1/6)/1
    CHECK(wilf::epsilon_prime(4, Rational(1, 4)) == Rational(1));  // 8*(1/4)/2
    CHECK(wilf::epsilon_prime(5, Rational(3, 10)) == Rational(1));
    CHECK_THROWS_AS(wilf::epsilon_prime(2, Rational(1, 4)), wilf::InvalidKError);
    CHECK_THROWS_AS(wilf::epsilon_prime(1, Rational(1, 4)), wilf::InvalidKError);
}

TEST_CASE("bound flags are internally consistent on every small semigroup") {
    wilf::enumerate_by_genus(10, [](const wilf::TreeNode& node) {
        const auto& sg = node.semigroup;
        if (sg.is_degenerate()) return;
        const auto be = evaluate_bounds(sg);
        const Int c = sg.conductor(), cp = sg.c_prime(), e = sg.embedding_dimension();
        CHECK(be.wilf_quotient == Rational(cp, c));
        CHECK(be.wilf_holds == (cp * e >= c));
        CHECK(be.is_wilf_equality == (cp * e == c));
        // e = 2 pins the quotient to exactly 1/2
        if (e == 2) CHECK(be.is_wilf_equality);
        // theorem-1 bound follows from the quotient bound when e = 2 or m = 1
        if (be.wilf_holds && (e == 2 || sg.multiplicity() == 1)) CHECK(be.theorem1_holds);
        CHECK(be.theorem1_holds ==
              (2 * e * cp >= 2 * c - (sg.multiplicity() - 1) * (e - 2)));
        CHECK(be.type_bound_holds == (cp * (sg.pseudo_frobenius().type + 1) >= c));
    });
}

}  // TEST_SUITE
