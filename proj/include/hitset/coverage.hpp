#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <tuple>
#include <vector>

#include "hitset/core.hpp"

namespace hitset {

// A weighted interval [lo,hi] of disk indices generated by an input point.
struct DualSegment {
    int lo = 0;
    int hi = 0;
    double weight = 0;
    int origin = -1;  // id of the generating point

    friend bool operator==(const DualSegment&, const DualSegment&) = default;
};

inline bool segment_order(const DualSegment& a, const DualSegment& b) {
    return std::tie(a.lo, a.hi, a.origin, a.weight) <
           std::tie(b.lo, b.hi, b.origin, b.weight);
}

struct CoverageSolution {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<DualSegment> chosen;  // ascending (lo, hi, origin)
    double total_weight = 0;
    int uncovered_position = -1;  // a dual point no segment covers, when infeasible

    // Prefix table W[j] = min weight covering the first j+1 dual points;
    // non-decreasing. Kept for cross-checks.
    std::vector<double> prefix_cost;
};

namespace detail {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Min over currently active segments with lazy expiry.
struct LazyMinHeap {
    // (key, expiry bound, seg index); entries whose bound fails the probe
    // are dropped.
    using Entry = std::tuple<double, int, int>;
    struct Cmp {
        bool operator()(const Entry& a, const Entry& b) const {
            return std::get<0>(a) > std::get<0>(b);
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, Cmp> heap;

    void push(double key, int bound, int idx) { heap.emplace(key, bound, idx); }

    // Min key among entries whose bound passes `alive`; -1 index if none.
    template <class Alive>
    std::pair<double, int> top(Alive alive) {
        while (!heap.empty() && !alive(std::get<1>(heap.top()))) heap.pop();
        if (heap.empty()) return {kInf, -1};
        return {std::get<0>(heap.top()), std::get<2>(heap.top())};
    }
};

}  // namespace detail

// Minimum-weight subset of segments covering every dual point, by the
// sweep DP over sorted point positions. Among equal-weight optima the
// chosen set is the one whose sorted (lo, hi, origin) sequence is
// lexicographically smallest. O((N+M) log(N+M)).
//
// dual_points must be strictly increasing.
inline CoverageSolution solve_coverage(const std::vector<int>& dual_points,
                                       const std::vector<DualSegment>& segments) {
    using detail::kInf;
    const int M = static_cast<int>(dual_points.size());
    const int N = static_cast<int>(segments.size());

    CoverageSolution sol;
    if (M == 0) {
        sol.status = SolveStatus::Optimal;
        return sol;
    }

    // Covered point-index range [first, last] per segment; segments covering
    // nothing are inert.
    std::vector<int> first(N), last(N);
    std::vector<int> by_first, by_last;
    by_first.reserve(N);
    for (int i = 0; i < N; ++i) {
        const auto& s = segments[i];
        HITSET_CHECK(s.lo <= s.hi && s.weight > 0, "bad dual segment");
        first[i] = static_cast<int>(std::lower_bound(dual_points.begin(), dual_points.end(), s.lo) -
                                    dual_points.begin());
        last[i] = static_cast<int>(std::upper_bound(dual_points.begin(), dual_points.end(), s.hi) -
                                   dual_points.begin()) -
                  1;
        if (first[i] <= last[i]) by_first.push_back(i);
    }
    by_last = by_first;
    std::sort(by_first.begin(), by_first.end(), [&](int a, int b) { return first[a] < first[b]; });
    std::sort(by_last.begin(), by_last.end(), [&](int a, int b) { return last[a] < last[b]; });

    // Suffix DP: suffix[j] = min weight covering points j..M-1.
    std::vector<double> suffix(M + 1, 0.0);
    std::vector<double> key(N, kInf);  // w + suffix[last+1], fixed at activation
    {
        detail::LazyMinHeap heap;
        auto it = by_last.rbegin();
        for (int j = M - 1; j >= 0; --j) {
            while (it != by_last.rend() && last[*it] == j) {
                key[*it] = segments[*it].weight + suffix[last[*it] + 1];
                heap.push(key[*it], first[*it], *it);
                ++it;
            }
            auto [best, idx] = heap.top([&](int f) { return f <= j; });
            suffix[j] = best;
            if (idx < 0 && sol.uncovered_position < 0)
                sol.uncovered_position = dual_points[j];
        }
    }

    // Prefix DP, kept as a monotonicity cross-check and for diagnostics.
    sol.prefix_cost.assign(M, kInf);
    {
        detail::LazyMinHeap heap;
        auto it = by_first.begin();
        for (int j = 0; j < M; ++j) {
            while (it != by_first.end() && first[*it] == j) {
                const double prev = first[*it] == 0 ? 0.0 : sol.prefix_cost[first[*it] - 1];
                heap.push(segments[*it].weight + prev, last[*it], *it);
                ++it;
            }
            auto [best, idx] = heap.top([&](int l) { return l >= j; });
            sol.prefix_cost[j] = best;
            (void)idx;
        }
    }

    if (std::isinf(suffix[0])) {
        sol.status = SolveStatus::Infeasible;
        return sol;
    }

    // Reconstruction: walk left to right, always taking the smallest
    // (lo, hi, origin) among segments that still reach an optimal suffix.
    // Keys were fixed at activation, so candidate keys match suffix[j]
    // bit-for-bit.
    {
        std::set<std::tuple<double, int, int, int, int>> active;  // key, lo, hi, origin, idx
        std::vector<std::vector<int>> expire(M + 1);
        auto it = by_first.begin();
        int j = 0;
        while (j < M) {
            while (it != by_first.end() && first[*it] <= j) {
                if (last[*it] >= j) {  // still able to cover something ahead
                    active.emplace(key[*it], segments[*it].lo, segments[*it].hi,
                                   segments[*it].origin, *it);
                    expire[last[*it] + 1].push_back(*it);
                }
                ++it;
            }
            auto top = active.begin();
            HITSET_CHECK(top != active.end(), "coverage reconstruction ran dry");
            HITSET_CHECK(std::get<0>(*top) == suffix[j], "coverage reconstruction key mismatch");
            const int idx = std::get<4>(*top);
            sol.chosen.push_back(segments[idx]);
            const int next = last[idx] + 1;
            for (int jj = j + 1; jj <= next; ++jj)
                for (int dead : expire[jj])
                    active.erase({key[dead], segments[dead].lo, segments[dead].hi,
                                  segments[dead].origin, dead});
            j = next;
        }
    }

    sol.status = SolveStatus::Optimal;
    for (const auto& s : sol.chosen) sol.total_weight += s.weight;
    return sol;
}

// -----------------------------------------------------------------------
// Direct 1D hitting-set dynamic program (no dual transformation): sweep the
// axis, keep point costs in a min-augmented tree keyed by x, and close each
// disk at its right endpoint. O((n+m) log(n+m)).

namespace detail {

// Fixed-size segment tree over point slots holding (value, payload) minima.
struct MinTree {
    int n = 0;
    std::vector<std::pair<double, int>> node;

    explicit MinTree(int size) : n(size), node(2 * std::max(size, 1), {kInf, -1}) {}

    void set(int i, double v, int payload) {
        int x = i + n;
        node[x] = {v, payload};
        for (x >>= 1; x >= 1; x >>= 1) node[x] = std::min(node[2 * x], node[2 * x + 1]);
    }

    // Min over [a, b).
    std::pair<double, int> min_in(int a, int b) const {
        std::pair<double, int> best{kInf, -1};
        for (int lo = a + n, hi = b + n; lo < hi; lo >>= 1, hi >>= 1) {
            if (lo & 1) best = std::min(best, node[lo++]);
            if (hi & 1) best = std::min(best, node[--hi]);
        }
        return best;
    }
};

}  // namespace detail

// Solve the 1D problem directly. Expects a Non-Containment-filtered 1D
// instance (points on the axis, disks = segments, both sorted).
inline HitSolution solve_hitting_1d_direct(const std::vector<WeightedPoint>& points,
                                           const std::vector<Disk>& disks) {
    using detail::kInf;
    const int n = static_cast<int>(points.size());
    const int m = static_cast<int>(disks.size());
    HitSolution out;
    if (m == 0) {
        out.status = SolveStatus::Optimal;
        return out;
    }
    if (n == 0) return HitSolution::infeasible();

    std::vector<double> right(m), xs(n);
    for (int j = 0; j < m; ++j) right[j] = disks[j].right();
    for (int i = 0; i < n; ++i) xs[i] = points[i].x;

    // a[i]: number of disks whose right endpoint lies strictly left of p_i
    // (= the paper's a_i as a 1-based disk index).
    std::vector<int> a(n);
    for (int i = 0; i < n; ++i)
        a[i] = static_cast<int>(std::lower_bound(right.begin(), right.end(), xs[i]) -
                                right.begin());

    struct Event {
        double x;
        int kind;  // 0 = point, 1 = disk right endpoint
        int idx;
    };
    std::vector<Event> events;
    events.reserve(n + m);
    for (int i = 0; i < n; ++i) events.push_back({xs[i], 0, i});
    for (int j = 0; j < m; ++j) events.push_back({right[j], 1, j});
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        return a.x < b.x || (a.x == b.x && a.kind < b.kind);
    });

    std::vector<double> W(m + 1, kInf);
    W[0] = 0;
    std::vector<int> choice(m + 1, -1);
    detail::MinTree costs(n);

    for (const auto& ev : events) {
        if (ev.kind == 0) {
            const int i = ev.idx;
            if (!std::isinf(W[a[i]])) costs.set(i, points[i].w + W[a[i]], i);
        } else {
            const int j = ev.idx;
            // Points hitting s_j have l_j < x < r_j; all are already swept.
            const int lo = static_cast<int>(
                std::upper_bound(xs.begin(), xs.end(), disks[j].left()) - xs.begin());
            const int hi = static_cast<int>(
                std::lower_bound(xs.begin(), xs.end(), disks[j].right()) - xs.begin());
            auto [v, who] = costs.min_in(lo, hi);
            W[j + 1] = v;
            choice[j + 1] = who;
        }
    }

    if (std::isinf(W[m])) return HitSolution::infeasible();

    std::vector<int> picked;
    for (int j = m; j > 0;) {
        const int i = choice[j];
        HITSET_CHECK(i >= 0, "1d dp reconstruction lost its witness");
        picked.push_back(points[i].id);
        out.total_weight += points[i].w;
        j = a[i];
    }
    std::sort(picked.begin(), picked.end());
    out.chosen_points = std::move(picked);
    out.status = SolveStatus::Optimal;
    return out;
}

}  // namespace hitset
