#include "wilf/subset_bound.hpp"

#include "wilf/errors.hpp"

#include <algorithm>
#include <sstream>

namespace wilf {

namespace {

std::string point_to_string(const Point& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ')';
    return os.str();
}

}  // namespace

Int weighted_value(const SubsetBoundInstance& inst, const Point& p) {
    Int total = 0;
    for (std::size_t i = 0; i < p.size(); ++i) total += p[i] * inst.weights[i];
    return total;
}

void canonicalize(PointSet& points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

std::string HypothesisReport::describe() const {
    switch (reason) {
        case Reason::None:
            return "hypotheses hold";
        case Reason::BadShape:
            return witness.empty() ? "malformed instance (dimension, weights or cap)"
                                   : "malformed point " + point_to_string(witness);
        case Reason::CapExceeded:
            return "weighted value of " + point_to_string(witness) + " exceeds the cap";
        case Reason::MissingPredecessor:
            return "down-set condition fails at " + point_to_string(witness) +
                   ": decrement of coordinate " + std::to_string(coordinate) + " leaves the set";
    }
    return "unknown";
}

HypothesisReport check_hypotheses(const SubsetBoundInstance& inst) {
    HypothesisReport rep;
    const auto fail = [&](HypothesisReport::Reason why, Point at = {}, Int coord = -1) {
        rep.ok = false;
        rep.reason = why;
        rep.witness = std::move(at);
        rep.coordinate = coord;
        return rep;
    };

    if (inst.dimension < 1 || inst.cap < 1 ||
        static_cast<Int>(inst.weights.size()) != inst.dimension)
        return fail(HypothesisReport::Reason::BadShape);
    for (Int w : inst.weights)
        if (w <= 0) return fail(HypothesisReport::Reason::BadShape);

    PointSet pts = inst.points;
    canonicalize(pts);

    for (const Point& p : pts) {
        if (static_cast<Int>(p.size()) != inst.dimension)
            return fail(HypothesisReport::Reason::BadShape, p);
        for (Int v : p)
            if (v < 0) return fail(HypothesisReport::Reason::BadShape, p);
        if (weighted_value(inst, p) > inst.cap)
            return fail(HypothesisReport::Reason::CapExceeded, p);
        for (Int j = 0; j < inst.dimension; ++j) {
            if (p[static_cast<std::size_t>(j)] == 0) continue;
            Point q = p;
            --q[static_cast<std::size_t>(j)];
            if (!std::binary_search(pts.begin(), pts.end(), q))
                return fail(HypothesisReport::Reason::MissingPredecessor, p, j);
        }
    }
    return rep;
}

InequalityResult downset_inequality(const SubsetBoundInstance& inst) {
    const HypothesisReport rep = check_hypotheses(inst);
    if (!rep.ok) throw HypothesesViolatedError(rep.describe());

    PointSet pts = inst.points;
    canonicalize(pts);

    Int defect = 0;  // sum of C - pi(s), each term non-negative under the cap
    for (const Point& p : pts) defect += inst.cap - weighted_value(inst, p);

    InequalityResult r;
    r.lhs = (inst.dimension + 1) * defect;
    r.rhs = inst.cap * static_cast<Int>(pts.size());
    r.holds = r.lhs >= r.rhs;
    r.equality = r.lhs == r.rhs;
    return r;
}

SubsetBoundInstance simplex_equality_case(Int d, Int C) {
    if (d < 1) throw std::invalid_argument("simplex_equality_case: dimension must be positive");
    if (C < 1) throw std::invalid_argument("simplex_equality_case: cap must be positive");

    SubsetBoundInstance inst;
    inst.dimension = d;
    inst.weights.assign(static_cast<std::size_t>(d), 1);
    inst.cap = C;

    Point cur(static_cast<std::size_t>(d), 0);
    const auto rec = [&](auto&& self, Int i, Int rem) -> void {
        if (i == d) {
            inst.points.push_back(cur);
            return;
        }
        for (Int v = 0; v <= rem; ++v) {
            cur[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, rem - v);
        }
        cur[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0, C);
    return inst;  // generated in ascending lex order, already canonical
}

void enumerate_downsets(Int d, Int box,
                        const std::function<void(const PointSet&)>& yield) {
    if (d < 1) throw std::invalid_argument("enumerate_downsets: dimension must be positive");
    if (box < 0) throw std::invalid_argument("enumerate_downsets: box must be non-negative");

    constexpr Int kGuard = Int{1} << 20;
    const Int base = box + 1;
    Int count = 1;
    for (Int i = 0; i < d; ++i) {
        if (count > kGuard / base)
            throw GuardExceededError("enumerate_downsets: lattice larger than 2^20 points");
        count *= base;
    }

    // Lattice points indexed in lex order via mixed radix; stride[j] steps
    // coordinate j, so predecessors always precede a point.
    std::vector<Int> stride(static_cast<std::size_t>(d), 1);
    for (Int j = d - 2; j >= 0; --j)
        stride[static_cast<std::size_t>(j)] = stride[static_cast<std::size_t>(j + 1)] * base;

    const auto decode = [&](Int idx) {
        Point p(static_cast<std::size_t>(d));
        for (Int j = d - 1; j >= 0; --j) {
            p[static_cast<std::size_t>(j)] = idx % base;
            idx /= base;
        }
        return p;
    };

    const auto n = static_cast<std::size_t>(count);
    std::vector<signed char> decision(n, -1);  // -1 unset, 0 excluded, 1 included
    std::vector<char> in(n, 0);
    PointSet cur;

    // Iterative exclude-first DFS over the points; every leaf is one down-set.
    std::size_t i = 0;
    for (;;) {
        if (i < n) {
            decision[i] = 0;
            ++i;
            continue;
        }
        yield(cur);
        for (;;) {
            if (i == 0) return;
            --i;
            if (decision[i] == 1) {
                decision[i] = -1;
                in[i] = 0;
                cur.pop_back();
                continue;
            }
            // Excluded so far; include it if all predecessors are present.
            Int idx = static_cast<Int>(i);
            bool can = true;
            for (Int j = 0; can && j < d; ++j) {
                const Int digit = (idx / stride[static_cast<std::size_t>(j)]) % base;
                if (digit > 0 && !in[i - static_cast<std::size_t>(stride[static_cast<std::size_t>(j)])])
                    can = false;
            }
            if (can) {
                decision[i] = 1;
                in[i] = 1;
                cur.push_back(decode(idx));
                ++i;
                break;
            }
            decision[i] = -1;
        }
    }
}

}  // namespace wilf
