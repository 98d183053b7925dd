#include "wilf/factorization.hpp"

#include "wilf/errors.hpp"

#include <algorithm>
#include <string>

namespace wilf {

namespace {

std::vector<Int> non_multiplicity_generators(const NumericalSemigroup& sg) {
    const auto& g = sg.minimal_generators();
    return std::vector<Int>(g.begin() + 1, g.end());
}

// tables[j][v]: v is a non-negative combination of weights[j..d-1].
// tables[d] recognizes only 0.
std::vector<std::vector<char>> suffix_tables(const std::vector<Int>& w, Int n) {
    const auto d = static_cast<Int>(w.size());
    std::vector<std::vector<char>> tables(static_cast<std::size_t>(d) + 1,
                                          std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
    tables[static_cast<std::size_t>(d)][0] = 1;
    for (Int j = d - 1; j >= 0; --j) {
        const auto& below = tables[static_cast<std::size_t>(j + 1)];
        auto& here = tables[static_cast<std::size_t>(j)];
        const Int wj = w[static_cast<std::size_t>(j)];
        for (Int v = 0; v <= n; ++v)
            here[static_cast<std::size_t>(v)] =
                below[static_cast<std::size_t>(v)] ||
                (v >= wj && here[static_cast<std::size_t>(v - wj)]);
    }
    return tables;
}

// Greedy over suffix-representable remainders; valid whenever tables[0][n].
Factorization lex_min_from_tables(const std::vector<Int>& w,
                                  const std::vector<std::vector<char>>& tables, Int n) {
    const auto d = static_cast<Int>(w.size());
    Factorization f;
    f.value = n;
    f.exponents.assign(static_cast<std::size_t>(d), 0);
    Int rem = n;
    for (Int j = 0; j < d; ++j) {
        const Int wj = w[static_cast<std::size_t>(j)];
        const auto& below = tables[static_cast<std::size_t>(j + 1)];
        Int x = 0;
        while (!below[static_cast<std::size_t>(rem - x * wj)]) ++x;
        f.exponents[static_cast<std::size_t>(j)] = x;
        rem -= x * wj;
    }
    return f;
}

void require_factorizable_shape(const NumericalSemigroup& sg, Int n) {
    if (sg.embedding_dimension() < 2)
        throw std::invalid_argument("factorization requires embedding dimension >= 2");
    if (n < 0) throw std::invalid_argument("factorization target must be non-negative");
}

}  // namespace

std::vector<Factorization> all_factorizations(const NumericalSemigroup& sg, Int n) {
    require_factorizable_shape(sg, n);
    const std::vector<Int> w = non_multiplicity_generators(sg);
    const auto d = static_cast<Int>(w.size());

    std::vector<Factorization> out;
    Factorization cur;
    cur.value = n;
    cur.exponents.assign(static_cast<std::size_t>(d), 0);
    const auto rec = [&](auto&& self, Int j, Int rem) -> void {
        if (j == d - 1) {
            const Int wj = w[static_cast<std::size_t>(j)];
            if (rem % wj == 0) {
                cur.exponents[static_cast<std::size_t>(j)] = rem / wj;
                out.push_back(cur);
            }
            return;
        }
        const Int wj = w[static_cast<std::size_t>(j)];
        for (Int x = 0; x * wj <= rem; ++x) {
            cur.exponents[static_cast<std::size_t>(j)] = x;
            self(self, j + 1, rem - x * wj);
        }
        cur.exponents[static_cast<std::size_t>(j)] = 0;
    };
    rec(rec, 0, n);
    return out;  // exponents grow lexicographically by construction
}

Factorization lex_min_factorization(const NumericalSemigroup& sg, Int n) {
    require_factorizable_shape(sg, n);
    const std::vector<Int> w = non_multiplicity_generators(sg);
    const auto tables = suffix_tables(w, n);
    if (!tables[0][static_cast<std::size_t>(n)])
        throw NotRepresentableError(std::to_string(n) +
                                    " has no factorization over the non-multiplicity generators");
    return lex_min_from_tables(w, tables, n);
}

SubsetBoundInstance apery_factorization_set(const NumericalSemigroup& sg) {
    if (sg.is_degenerate())
        throw DegenerateSemigroupError("Apery factorization set undefined for the full semigroup N");
    const std::vector<Int> w = non_multiplicity_generators(sg);

    SubsetBoundInstance inst;
    inst.dimension = static_cast<Int>(w.size());
    inst.weights = w;
    inst.cap = sg.conductor() + sg.multiplicity() - 1;

    // Every Apery element is <= cap and has no factorization using the
    // multiplicity, so one table set serves all entries.
    const auto tables = suffix_tables(w, inst.cap);
    for (Int a : sg.apery_set().entries) {
        if (!tables[0][static_cast<std::size_t>(a)])
            throw NotRepresentableError("Apery element " + std::to_string(a) +
                                        " unexpectedly not representable");
        inst.points.push_back(lex_min_from_tables(w, tables, a).exponents);
    }
    canonicalize(inst.points);
    return inst;
}

}  // namespace wilf
