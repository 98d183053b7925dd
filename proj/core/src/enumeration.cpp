#include "wilf/enumeration.hpp"

#include "node_checks.hpp"
#include "wilf/errors.hpp"

#include <algorithm>
#include <utility>

namespace wilf {

namespace {

std::vector<Int> effective_generators_of(const NumericalSemigroup& sg) {
    std::vector<Int> out;
    for (Int g : sg.minimal_generators())
        if (g >= sg.conductor()) out.push_back(g);  // g > Frobenius number
    return out;
}

MinQuotientWitness witness_of(const TreeNode& node) {
    const auto& sg = node.semigroup;
    MinQuotientWitness w;
    w.quotient = Rational(sg.c_prime(), sg.conductor());
    w.genus = node.genus;
    w.generators = sg.minimal_generators();
    w.mc_ratio = Rational(sg.multiplicity(), sg.conductor());
    return w;
}

}  // namespace

TreeNode semigroup_tree_root() {
    TreeNode root;  // value-initialized NumericalSemigroup is N
    root.effective_generators = effective_generators_of(root.semigroup);
    root.genus = 0;
    return root;
}

std::vector<TreeNode> semigroup_tree_children(const TreeNode& node) {
    const NumericalSemigroup& sg = node.semigroup;
    std::vector<TreeNode> out;
    out.reserve(node.effective_generators.size());

    for (Int g : node.effective_generators) {
        const Int c2 = g + 1;  // g becomes the child's Frobenius number
        Int m2 = sg.multiplicity();
        if (g == m2)
            while (!sg.is_member(++m2)) {
            }

        std::vector<bool> table(static_cast<std::size_t>(c2 + 2 * m2));
        for (Int n = 0; n < c2 + 2 * m2; ++n)
            table[static_cast<std::size_t>(n)] = n != g && sg.is_member(n);

        TreeNode child;
        child.semigroup = detail::adopt_table(std::move(table), c2);
        child.effective_generators = effective_generators_of(child.semigroup);
        child.genus = node.genus + 1;
        out.push_back(std::move(child));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Check ids
// ---------------------------------------------------------------------------

std::string to_string(CheckId id) {
    switch (id) {
        case CheckId::Wilf: return "wilf";
        case CheckId::Theorem1: return "thm1";
        case CheckId::TypeBound: return "type";
        case CheckId::CPrime: return "cprime";
        case CheckId::Apery: return "apery";
        case CheckId::Downset: return "downset";
        case CheckId::Conductor: return "conductor";
    }
    return "?";
}

std::optional<CheckId> check_id_from_string(std::string_view name) {
    for (CheckId id : all_checks())
        if (name == to_string(id)) return id;
    return std::nullopt;
}

const std::set<CheckId>& all_checks() {
    static const std::set<CheckId> ids = {
        CheckId::Wilf,    CheckId::Theorem1, CheckId::TypeBound, CheckId::CPrime,
        CheckId::Apery,   CheckId::Downset,  CheckId::Conductor,
    };
    return ids;
}

bool improves(const std::optional<MinQuotientWitness>& a, const MinQuotientWitness& b) {
    if (!a) return true;
    if (b.quotient != a->quotient) return b.quotient < a->quotient;
    if (b.genus != a->genus) return b.genus < a->genus;
    return b.generators < a->generators;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

SweepSummary summarize_node(const TreeNode& node, const std::set<CheckId>& checks,
                            const SweepOptions& opt) {
    const NumericalSemigroup& sg = node.semigroup;
    SweepSummary s;
    s.genus_bound = node.genus;
    s.total_visited = 1;
    s.per_genus.assign(static_cast<std::size_t>(node.genus) + 1, 0);
    s.per_genus[static_cast<std::size_t>(node.genus)] = 1;
    s.per_embedding_dimension[sg.embedding_dimension()] = 1;
    for (CheckId id : checks) {
        s.violation_counts[id] = 0;
        s.violation_witnesses[id];
    }
    if (sg.is_degenerate()) return s;  // N carries counts only

    const MinQuotientWitness w = witness_of(node);
    s.min_quotient = w;
    s.min_quotient_by_dimension.emplace(sg.embedding_dimension(), w);

    std::optional<BoundEvaluation> be;
    const auto bounds = [&]() -> const BoundEvaluation& {
        if (!be) be = evaluate_bounds(sg);
        return *be;
    };

    for (CheckId id : checks) {
        bool ok = true;
        switch (id) {
            case CheckId::Wilf:
                ok = bounds().wilf_holds &&
                     detail::wilf_flags_consistent(bounds(), sg.embedding_dimension());
                break;
            case CheckId::Theorem1:
                ok = bounds().theorem1_holds;
                break;
            case CheckId::TypeBound:
                ok = bounds().type_bound_holds;
                break;
            case CheckId::CPrime:
                ok = detail::c_prime_formula_matches(sg);
                break;
            case CheckId::Apery:
                ok = detail::apery_invariants_hold(sg);
                break;
            case CheckId::Downset:
                ok = detail::downset_bound_holds_for(sg);
                break;
            case CheckId::Conductor:
                for (const Rational& eps : opt.conductor_epsilons)
                    ok = ok && conductor_bound_holds(sg, eps);
                break;
        }
        if (!ok) {
            ++s.violation_counts[id];
            s.violation_witnesses[id].push_back(sg.minimal_generators());
        }
    }
    return s;
}

void merge_summaries(SweepSummary& acc, SweepSummary&& part) {
    acc.genus_bound = std::max(acc.genus_bound, part.genus_bound);
    acc.total_visited += part.total_visited;

    if (acc.per_genus.size() < part.per_genus.size()) acc.per_genus.resize(part.per_genus.size(), 0);
    for (std::size_t g = 0; g < part.per_genus.size(); ++g) acc.per_genus[g] += part.per_genus[g];

    for (const auto& [e, n] : part.per_embedding_dimension) acc.per_embedding_dimension[e] += n;

    if (part.min_quotient && improves(acc.min_quotient, *part.min_quotient))
        acc.min_quotient = std::move(*part.min_quotient);
    for (auto& [e, w] : part.min_quotient_by_dimension) {
        const auto it = acc.min_quotient_by_dimension.find(e);
        if (it == acc.min_quotient_by_dimension.end()) {
            acc.min_quotient_by_dimension.emplace(e, std::move(w));
        } else {
            std::optional<MinQuotientWitness> cur = std::move(it->second);
            if (improves(cur, w))
                it->second = std::move(w);
            else
                it->second = std::move(*cur);
        }
    }

    for (const auto& [id, n] : part.violation_counts) acc.violation_counts[id] += n;
    for (auto& [id, ws] : part.violation_witnesses) {
        auto& dst = acc.violation_witnesses[id];
        for (auto& w : ws) {
            if (dst.size() >= SweepSummary::kWitnessCap) break;
            dst.push_back(std::move(w));
        }
    }
}

SweepSummary enumerate_by_genus(Int g_max, const std::function<void(const TreeNode&)>& visit) {
    const std::set<CheckId> no_checks;
    const SweepOptions opt;  // sequential: the visitor must see depth-first order
    return tree_reduce<SweepSummary>(
        g_max, TraversalOptions{1, g_max},
        [&](const TreeNode& node) {
            if (visit) visit(node);
            return summarize_node(node, no_checks, opt);
        },
        SweepSummary{}, merge_summaries);
}

SweepSummary sweep_verify(Int g_max, const std::set<CheckId>& checks, const SweepOptions& opt) {
    SweepSummary s = tree_reduce<SweepSummary>(
        g_max, opt.traversal,
        [&](const TreeNode& node) { return summarize_node(node, checks, opt); }, SweepSummary{},
        merge_summaries);
    s.genus_bound = g_max;
    s.per_genus.resize(static_cast<std::size_t>(g_max) + 1);
    return s;
}

// ---------------------------------------------------------------------------
// Extremal quotients
// ---------------------------------------------------------------------------

std::optional<ExtremalResult> empirical_F(Int min_multiplicity, Int k, Int g_max,
                                          const SweepOptions& opt) {
    if (k < 2) throw std::invalid_argument("empirical_F: k must be at least 2");
    if (min_multiplicity < 0)
        throw std::invalid_argument("empirical_F: min_multiplicity must be non-negative");

    using Best = std::optional<MinQuotientWitness>;
    const Best best = tree_reduce<Best>(
        g_max, opt.traversal,
        [&](const TreeNode& node) -> Best {
            const auto& sg = node.semigroup;
            if (sg.is_degenerate() || sg.embedding_dimension() != k ||
                sg.multiplicity() <= min_multiplicity)
                return std::nullopt;
            return witness_of(node);
        },
        std::nullopt,
        [](Best& acc, Best&& part) {
            if (part && improves(acc, *part)) acc = std::move(part);
        });

    if (!best) return std::nullopt;
    ExtremalResult res;
    res.witness = *best;
    res.distance_to_floor = best->quotient - Rational(1, k);
    return res;
}

std::vector<TrendRow> min_quotient_trend(Int k, Int g_max, const SweepOptions& opt) {
    if (k < 2) throw std::invalid_argument("min_quotient_trend: k must be at least 2");

    using PerGenus = std::map<Int, MinQuotientWitness>;
    const PerGenus minima = tree_reduce<PerGenus>(
        g_max, opt.traversal,
        [&](const TreeNode& node) -> PerGenus {
            const auto& sg = node.semigroup;
            if (sg.is_degenerate() || sg.embedding_dimension() != k) return {};
            return {{node.genus, witness_of(node)}};
        },
        PerGenus{},
        [](PerGenus& acc, PerGenus&& part) {
            for (auto& [g, w] : part) {
                const auto it = acc.find(g);
                if (it == acc.end()) {
                    acc.emplace(g, std::move(w));
                } else {
                    std::optional<MinQuotientWitness> cur = std::move(it->second);
                    if (improves(cur, w))
                        it->second = std::move(w);
                    else
                        it->second = std::move(*cur);
                }
            }
        });

    // Running minimum: one row per genus from the first e = k instance on.
    std::vector<TrendRow> rows;
    std::optional<MinQuotientWitness> best;
    for (Int g = 0; g <= g_max; ++g) {
        const auto it = minima.find(g);
        if (it != minima.end() && improves(best, it->second)) best = it->second;
        if (best) rows.push_back({g, best->quotient, best->mc_ratio});
    }
    return rows;
}

}  // namespace wilf
