#pragma once

// Exhaustive enumeration of all numerical semigroups up to a genus bound.
//
// The tree rooted at N: a node's children remove one effective generator
// (minimal generator >= conductor), raising the genus by exactly one; every
// semigroup of genus g is reached exactly once at depth g. Children are
// ordered by removed generator, ascending, and each child's membership table
// is derived from the parent's (one bit cleared, no re-sieving).
//
// Sweeps fold a per-node payload over the tree. In parallel mode the tree is
// split at a fixed frontier genus; subtrees become tasks, and payloads are
// merged in depth-first order regardless of which worker finishes first, so
// results are identical for every worker count.

#include "wilf/bounds.hpp"
#include "wilf/semigroup.hpp"
#include "wilf/types.hpp"

#include <atomic>
#include <cstddef>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

namespace wilf {

struct TreeNode {
    NumericalSemigroup semigroup;
    std::vector<Int> effective_generators;  // minimal generators >= conductor
    Int genus = 0;
};

// The root (the full semigroup N, genus 0).
TreeNode semigroup_tree_root();

// All children of `node`, ordered by removed generator ascending. Each child
// has genus node.genus + 1 and conductor (removed generator) + 1.
std::vector<TreeNode> semigroup_tree_children(const TreeNode& node);

struct TraversalOptions {
    int workers = 1;       // worker threads for the subtree phase; 1 = plain DFS
    Int split_genus = 10;  // subtrees rooted at this genus become parallel tasks
};

namespace detail {

template <class Payload, class MapFn, class MergeFn>
void dfs_fold(const TreeNode& node, Int g_max, const MapFn& map, const MergeFn& merge,
              Payload& acc) {
    merge(acc, map(node));
    if (node.genus >= g_max) return;
    for (const TreeNode& child : semigroup_tree_children(node))
        dfs_fold(child, g_max, map, merge, acc);
}

template <class Payload, class MapFn, class MergeFn>
Payload subtree_fold(const TreeNode& root, Int g_max, const MapFn& map, const MergeFn& merge) {
    Payload acc = map(root);
    if (root.genus < g_max)
        for (const TreeNode& child : semigroup_tree_children(root))
            dfs_fold(child, g_max, map, merge, acc);
    return acc;
}

}  // namespace detail

// Folds map(node) over every semigroup of genus <= g_max, merging payloads in
// depth-first pre-order. map must be pure; in parallel mode it runs
// concurrently on distinct nodes. merge(acc, part) consumes part. The merge
// order (hence the result) does not depend on the worker count.
template <class Payload, class MapFn, class MergeFn>
Payload tree_reduce(Int g_max, const TraversalOptions& opt, const MapFn& map, Payload init,
                    const MergeFn& merge) {
    if (g_max < 0) throw std::invalid_argument("tree_reduce: negative genus bound");
    TreeNode root = semigroup_tree_root();

    if (opt.workers <= 1 || g_max <= opt.split_genus) {
        Payload acc = std::move(init);
        detail::dfs_fold(root, g_max, map, merge, acc);
        return acc;
    }

    // Pre-pass: map shallow nodes inline, queue frontier subtrees as tasks,
    // and remember the depth-first position of every contribution.
    std::vector<std::variant<Payload, std::size_t>> events;
    std::vector<TreeNode> tasks;
    const Int split = opt.split_genus;
    const std::function<void(const TreeNode&)> prepass = [&](const TreeNode& node) {
        if (node.genus == split) {
            events.emplace_back(std::in_place_index<1>, tasks.size());
            tasks.push_back(node);
            return;
        }
        events.emplace_back(std::in_place_index<0>, map(node));
        for (const TreeNode& child : semigroup_tree_children(node)) prepass(child);
    };
    prepass(root);

    std::vector<std::promise<Payload>> promises(tasks.size());
    std::vector<std::future<Payload>> futures;
    futures.reserve(tasks.size());
    for (auto& p : promises) futures.push_back(p.get_future());

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                promises[i].set_value(
                    detail::subtree_fold<Payload>(tasks[i], g_max, map, merge));
            } catch (...) {
                promises[i].set_exception(std::current_exception());
            }
        }
    };
    std::vector<std::jthread> pool;
    const std::size_t n_threads =
        std::min<std::size_t>(static_cast<std::size_t>(opt.workers), tasks.size());
    pool.reserve(n_threads);
    for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(work);

    Payload acc = std::move(init);
    for (auto& ev : events) {
        if (ev.index() == 0)
            merge(acc, std::get<0>(std::move(ev)));
        else
            merge(acc, futures[std::get<1>(ev)].get());
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Verification sweeps
// ---------------------------------------------------------------------------

enum class CheckId {
    Wilf,       // c'*e >= c, plus equality-flag consistency and e=2 => equality
    Theorem1,   // c' >= c/e - (m-1)(e-2)/(2e)
    TypeBound,  // c'*(t+1) >= c
    CPrime,     // Apery-formula c' equals the direct count
    Apery,      // Apery set invariants incl. every entry <= c + m - 1
    Downset,    // apery_factorization_set satisfies hypotheses and inequality
    Conductor,  // m/c > eps implies c <= (2/eps)^k, for each configured eps
};

std::string to_string(CheckId id);
std::optional<CheckId> check_id_from_string(std::string_view name);
const std::set<CheckId>& all_checks();

struct MinQuotientWitness {
    Rational quotient;            // c'/c
    Int genus = 0;
    std::vector<Int> generators;  // minimal generators of the witness
    Rational mc_ratio;            // m/c of the witness

    bool operator==(const MinQuotientWitness&) const = default;
};

// Candidate order: smaller quotient, then smaller genus, then lex-smaller
// generator tuple. Returns true when `b` beats `a`.
bool improves(const std::optional<MinQuotientWitness>& a, const MinQuotientWitness& b);

struct SweepSummary {
    static constexpr std::size_t kWitnessCap = 16;  // stored witnesses per check

    Int genus_bound = 0;
    long long total_visited = 0;           // includes N
    std::vector<long long> per_genus;      // index 0..genus_bound
    std::map<Int, long long> per_embedding_dimension;
    std::optional<MinQuotientWitness> min_quotient;               // excludes N
    std::map<Int, MinQuotientWitness> min_quotient_by_dimension;  // excludes N
    std::map<CheckId, long long> violation_counts;                // per requested check
    std::map<CheckId, std::vector<std::vector<Int>>> violation_witnesses;

    bool operator==(const SweepSummary&) const = default;
};

struct SweepOptions {
    TraversalOptions traversal;
    // Thresholds exercised by CheckId::Conductor.
    std::vector<Rational> conductor_epsilons = {Rational(1, 2), Rational(1, 3), Rational(1, 4)};
};

// Summary of a single node under the requested checks (N contributes counts
// only). This is the map function of every sweep; the CLI reuses it.
SweepSummary summarize_node(const TreeNode& node, const std::set<CheckId>& checks,
                            const SweepOptions& opt);

// Depth-first-order merge; associative with deterministic tie-breaks.
void merge_summaries(SweepSummary& acc, SweepSummary&& part);

// Sequential walk (plain DFS, children ascending): calls visit exactly once
// per semigroup of genus <= g_max and returns the counts-only summary.
SweepSummary enumerate_by_genus(Int g_max, const std::function<void(const TreeNode&)>& visit);

// Runs the requested checks on every semigroup of genus <= g_max.
SweepSummary sweep_verify(Int g_max, const std::set<CheckId>& checks,
                          const SweepOptions& opt = {});

// ---------------------------------------------------------------------------
// Extremal quotients
// ---------------------------------------------------------------------------

struct ExtremalResult {
    MinQuotientWitness witness;  // minimum over e = k, m > min_multiplicity
    Rational distance_to_floor;  // quotient - 1/k (>= 0)

    bool operator==(const ExtremalResult&) const = default;
};

// Minimum quotient over semigroups with embedding dimension k and
// multiplicity > min_multiplicity, genus <= g_max. Empty when no semigroup
// in range matches.
std::optional<ExtremalResult> empirical_F(Int min_multiplicity, Int k, Int g_max,
                                          const SweepOptions& opt = {});

struct TrendRow {
    Int genus = 0;
    Rational min_quotient;  // running minimum over e = k, genus <= this row
    Rational witness_mc;    // m/c of the running minimizer

    bool operator==(const TrendRow&) const = default;
};

// One row per genus from the first e = k instance onward; the running
// minimum never increases and is bounded below by 1/k wherever the quotient
// inequality holds.
std::vector<TrendRow> min_quotient_trend(Int k, Int g_max, const SweepOptions& opt = {});

}  // namespace wilf
