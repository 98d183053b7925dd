#include "wilf/semigroup.hpp"

#include "wilf/errors.hpp"

#include <algorithm>
#include <numeric>

namespace wilf {

namespace {

// Minimal generators read off a membership table: the multiplicity plus the
// nonzero Apery elements with no decomposition into two nonzero members.
std::vector<Int> minimal_generators_from(const std::vector<bool>& table, Int c, Int m) {
    const auto member = [&](Int n) {
        return n >= c || table[static_cast<std::size_t>(n)];
    };
    std::vector<Int> out;
    const Int hi = std::max(m, c + m - 1);
    for (Int x = m; x <= hi; ++x) {
        if (!member(x)) continue;
        if (x > m && member(x - m)) continue;  // decomposes as (x - m) + m
        bool minimal = true;
        for (Int y = m; minimal && 2 * y <= x; ++y)
            if (member(y) && member(x - y)) minimal = false;
        if (minimal) out.push_back(x);
    }
    return out;
}

}  // namespace

namespace detail {

NumericalSemigroup adopt_table(std::vector<bool> table, Int conductor) {
    NumericalSemigroup sg;
    sg.conductor_ = conductor;

    Int m = conductor > 0 ? conductor : 1;
    for (Int n = 1; n < conductor; ++n)
        if (table[static_cast<std::size_t>(n)]) {
            m = n;
            break;
        }
    sg.multiplicity_ = m;

    table.resize(static_cast<std::size_t>(conductor + 2 * m));
    for (Int n = conductor; n < conductor + 2 * m; ++n)
        table[static_cast<std::size_t>(n)] = true;

    sg.small_elements_.clear();
    sg.gaps_.clear();
    for (Int n = 0; n < conductor; ++n)
        (table[static_cast<std::size_t>(n)] ? sg.small_elements_ : sg.gaps_).push_back(n);

    sg.minimal_generators_ = minimal_generators_from(table, conductor, m);
    sg.table_ = std::move(table);
    return sg;
}

}  // namespace detail

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> gens) {
    if (gens.empty()) throw std::invalid_argument("from_generators: empty generator list");
    std::vector<Int> g(gens.begin(), gens.end());
    for (Int x : g)
        if (x <= 0) throw std::invalid_argument("from_generators: generators must be positive");
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());

    Int d = 0;
    for (Int x : g) d = std::gcd(d, x);
    if (d != 1) throw NotCofiniteError("generators not coprime");

    const Int m = g.front();

    // Forward propagation; the conductor is the start of the first run of m
    // consecutive members (anything at or above such a run stays a member).
    std::vector<bool> table;
    table.resize(static_cast<std::size_t>(std::max<Int>(g.back() + 2 * m + 1, 16)));
    Int c = -1;
    Int run = 0;
    for (Int n = 0;; ++n) {
        if (static_cast<std::size_t>(n) >= table.size()) table.resize(table.size() * 2);
        bool mem = n == 0;
        for (std::size_t i = 0; !mem && i < g.size() && g[i] <= n; ++i)
            mem = table[static_cast<std::size_t>(n - g[i])];
        table[static_cast<std::size_t>(n)] = mem;
        run = mem ? run + 1 : 0;
        if (run == m) {
            c = n - m + 1;
            break;
        }
    }
    return detail::adopt_table(std::move(table), c);
}

NumericalSemigroup NumericalSemigroup::from_generators(std::initializer_list<Int> gens) {
    return from_generators(std::span<const Int>(gens.begin(), gens.size()));
}

AperySet NumericalSemigroup::apery_set() const {
    AperySet ap;
    ap.entries.assign(static_cast<std::size_t>(multiplicity_), -1);
    Int found = 0;
    for (Int n = 0; found < multiplicity_; ++n) {
        if (!is_member(n)) continue;
        const auto r = static_cast<std::size_t>(n % multiplicity_);
        if (ap.entries[r] < 0) {
            ap.entries[r] = n;
            ++found;
        }
    }
    return ap;
}

TypeData NumericalSemigroup::pseudo_frobenius() const {
    if (is_degenerate())
        throw DegenerateSemigroupError("pseudo-Frobenius numbers undefined for the full semigroup N");
    TypeData td;
    for (Int x : gaps_) {
        bool pf = true;
        for (Int g : minimal_generators_)
            if (!is_member(x + g)) {
                pf = false;
                break;
            }
        if (pf) td.pseudo_frobenius.push_back(x);
    }
    td.type = static_cast<Int>(td.pseudo_frobenius.size());
    return td;
}

Rational c_prime_apery(const NumericalSemigroup& sg) {
    if (sg.is_degenerate())
        throw DegenerateSemigroupError("Apery c' formula undefined for the full semigroup N");
    const Int m = sg.multiplicity();
    const Int c = sg.conductor();
    Rational total(m - 1, 2);
    for (Int a : sg.apery_set().entries) total += Rational(c - a, m);
    return total;
}

}  // namespace wilf
