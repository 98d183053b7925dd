#include "wilf/enumeration.hpp"
#include "wilf/errors.hpp"
#include "wilf/factorization.hpp"
#include "wilf/semigroup.hpp"
#include "wilf/subset_bound.hpp"

#include "../common/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

using wilf::Int;
using wilf::NumericalSemigroup;

namespace {

std::vector<Int> non_mult_gens(const NumericalSemigroup& sg) {
    auto gens = sg.minimal_generators();
    return {gens.begin() + 1, gens.end()};
}

Int weighted(const std::vector<Int>& w, const std::vector<Int>& x) {
    return std::inner_product(w.begin(), w.end(), x.begin(), Int{0});
}

}  // namespace

TEST_SUITE("factorization") {

TEST_CASE("all factorizations over the non-multiplicity generators") {
    const auto sg = NumericalSemigroup::from_generators({5, 7, 9});
    SUBCASE("unique representations") {
        auto f16 = all_factorizations(sg, 16);
        REQUIRE(f16.size() == 1);
        CHECK(f16[0].exponents == std::vector<Int>{1, 1});
        CHECK(f16[0].value == 16);
        auto f18 = all_factorizations(sg, 18);
        REQUIRE(f18.size() == 1);
        CHECK(f18[0].exponents == std::vector<Int>{0, 2});
    }
    SUBCASE("zero has the empty-sum representation") {
        auto f0 = all_factorizations(sg, 0);
        REQUIRE(f0.size() == 1);
        CHECK(f0[0].exponents == std::vector<Int>{0, 0});
    }
    SUBCASE("non-representable values yield nothing") {
        CHECK(all_factorizations(sg, 1).empty());
        CHECK(all_factorizations(sg, 12).empty());  // 7a+9b never hits 12
    }
    SUBCASE("matches the exhaustive oracle, lex-ascending") {
        const auto w = non_mult_gens(sg);
        for (Int n = 0; n <= 95; ++n) {
            const auto got = all_factorizations(sg, n);
            const auto want = oracle::exponent_vectors(w, n);
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                CHECK(got[i].exponents == want[i]);
                CHECK(got[i].value == n);
            }
            CHECK(std::is_sorted(got.begin(), got.end(),
                                 [](const auto& a, const auto& b) {
                                     return a.exponents < b.exponents;
                                 }));
        }
    }
}

TEST_CASE("lexicographically minimal factorization") {
    SUBCASE("values") {
        const auto a = NumericalSemigroup::from_generators({5, 7, 9});
        CHECK(lex_min_factorization(a, 16).exponents == std::vector<Int>{1, 1});
        CHECK(lex_min_factorization(a, 0).exponents == std::vector<Int>{0, 0});
        const auto b = NumericalSemigroup::from_generators({3, 7, 8});
        CHECK(lex_min_factorization(b, 8).exponents == std::vector<Int>{0, 1});
    }
    SUBCASE("first coordinate is most significant") {
        // 63 over (7,9) has exactly (9,0) and (0,7); lex reads x_7 first
        const auto sg = NumericalSemigroup::from_generators({5, 7, 9});
        CHECK(lex_min_factorization(sg, 63).exponents == std::vector<Int>{0, 7});
    }
    SUBCASE("throws when nothing represents the value") {
        const auto sg = NumericalSemigroup::from_generators({5, 7, 9});
        CHECK_THROWS_AS(lex_min_factorization(sg, 1), wilf::NotRepresentableError);
        CHECK_THROWS_AS(lex_min_factorization(sg, 12), wilf::NotRepresentableError);
    }
    SUBCASE("agrees with the exhaustive minimum on every representable value") {
        for (const auto& gens : {std::vector<Int>{5, 7, 9}, {3, 7, 8}, {7, 11, 12, 13}}) {
            const auto sg = NumericalSemigroup::from_generators(gens);
            const auto w = non_mult_gens(sg);
            for (Int n = 0; n <= 80; ++n) {
                const auto all = oracle::exponent_vectors(w, n);
                if (all.empty()) continue;
                const auto got = lex_min_factorization(sg, n);
                CHECK(got.exponents == *std::min_element(all.begin(), all.end()));
                CHECK(weighted(w, got.exponents) == n);
            }
        }
    }
}

TEST_CASE("factorization set of the apery elements") {
    SUBCASE("<3,7,8>") {
        const auto inst =
            apery_factorization_set(NumericalSemigroup::from_generators({3, 7, 8}));
        CHECK(inst.dimension == 2);
        CHECK(inst.weights == std::vector<Int>{7, 8});
        CHECK(inst.cap == 8);
        CHECK(inst.points ==
              wilf::PointSet{{0, 0}, {0, 1}, {1, 0}});  // canonical sorted order
    }
    SUBCASE("<5,7,9>") {
        const auto inst =
            apery_factorization_set(NumericalSemigroup::from_generators({5, 7, 9}));
        CHECK(inst.dimension == 2);
        CHECK(inst.weights == std::vector<Int>{7, 9});
        CHECK(inst.cap == 18);
        CHECK(inst.points == wilf::PointSet{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}});
    }
    SUBCASE("<2,3> gives a one-dimensional chain") {
        const auto inst = apery_factorization_set(NumericalSemigroup::from_generators({2, 3}));
        CHECK(inst.dimension == 1);
        CHECK(inst.weights == std::vector<Int>{3});
        CHECK(inst.cap == 3);
        CHECK(inst.points == wilf::PointSet{{0}, {1}});
    }
    SUBCASE("degenerate and too-small inputs are rejected") {
        CHECK_THROWS_AS(apery_factorization_set(NumericalSemigroup::from_generators({1})),
                        wilf::DegenerateSemigroupError);
    }
}

TEST_CASE("factorization set invariants on every small semigroup") {
    // |S| = m, every point is the lex-min factorization of its apery value,
    // weighted values hit each apery element, and S passes the down-set
    // hypotheses. Exhaustive over genus <= 8 (the 18/14 ranges run in the
    // acceptance harness).
    wilf::enumerate_by_genus(8, [](const wilf::TreeNode& node) {
        const auto& sg = node.semigroup;
        if (sg.is_degenerate() || sg.embedding_dimension() < 2) return;
        const auto inst = apery_factorization_set(sg);
        const auto& ap = sg.apery_set().entries;
        REQUIRE(inst.points.size() == static_cast<std::size_t>(sg.multiplicity()));
        const auto hyp = check_hypotheses(inst);
        CAPTURE(sg.minimal_generators()[0]);
        CHECK(hyp.ok);
        std::vector<Int> values;
        for (const auto& p : inst.points) {
            const Int v = weighted(inst.weights, p);
            values.push_back(v);
            CHECK(lex_min_factorization(sg, v).exponents == p);
            CHECK(v <= inst.cap);
        }
        std::sort(values.begin(), values.end());
        auto sorted_ap = ap;
        std::sort(sorted_ap.begin(), sorted_ap.end());
        CHECK(values == sorted_ap);
    });
}

TEST_CASE("lex-minimality transfers membership") {
    // any lattice point under the cap that is not in S either maps outside
    // the apery set or is not the lex-min factorization of its value
    for (const auto& gens : {std::vector<Int>{5, 7, 9}, {3, 7, 8}}) {
        const auto sg = NumericalSemigroup::from_generators(gens);
        const auto inst = apery_factorization_set(sg);
        const auto& ap = sg.apery_set().entries;
        const auto in_apery = [&](Int v) {
            return std::find(ap.begin(), ap.end(), v) != ap.end();
        };
        // walk the full grid of points with weighted value <= cap
        std::vector<Int> x(inst.weights.size(), 0);
        const std::function<void(std::size_t, Int)> walk = [&](std::size_t i, Int used) {
            if (i == x.size()) {
                if (std::binary_search(inst.points.begin(), inst.points.end(), x)) return;
                const Int v = used;
                const bool lexmin =
                    lex_min_factorization(sg, v).exponents == x;
                CHECK((!in_apery(v) || !lexmin));
                return;
            }
            for (Int e = 0; used + e * inst.weights[i] <= inst.cap; ++e) {
                x[i] = e;
                walk(i + 1, used + e * inst.weights[i]);
            }
            x[i] = 0;
        };
        walk(0, 0);
    }
}

}  // TEST_SUITE
