#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "hitset/core.hpp"
#include "hitset/coverage.hpp"

namespace hitset {

// Dual points are 1..m by construction; materialized only where a concrete
// vector is handy.
inline std::vector<int> dual_points(int m) {
    std::vector<int> pts(m);
    for (int j = 0; j < m; ++j) pts[j] = j + 1;
    return pts;
}

// Maximal runs of hit disk indices for one point, as 1-based [lo,hi]
// intervals.
template <class HitFn>
inline void append_runs(int m, const WeightedPoint& p, HitFn&& hit,
                        std::vector<DualSegment>& out) {
    int run_start = 0;  // 1-based; 0 = not in a run
    for (int j = 1; j <= m; ++j) {
        const bool h = hit(j);
        if (h && run_start == 0) run_start = j;
        if (!h && run_start != 0) {
            out.push_back({run_start, j - 1, p.w, p.id});
            run_start = 0;
        }
    }
    if (run_start != 0) out.push_back({run_start, m, p.w, p.id});
}

// O(nm) reference generator: evaluate the hit predicate for every pair.
inline std::vector<DualSegment> dual_segments_bruteforce(
    const std::vector<WeightedPoint>& points, const std::vector<Disk>& disks,
    Metric metric) {
    std::vector<DualSegment> out;
    const int m = static_cast<int>(disks.size());
    for (const auto& p : points)
        append_runs(m, p, [&](int j) { return hits(p, disks[j - 1], metric); }, out);
    return out;
}

// Collapse identical intervals to their minimum weight; ties keep the
// smaller origin id. Output sorted by (lo, hi).
inline std::vector<DualSegment> dedup_segments(std::vector<DualSegment> segs) {
    std::sort(segs.begin(), segs.end(), [](const DualSegment& a, const DualSegment& b) {
        return std::tie(a.lo, a.hi, a.weight, a.origin) <
               std::tie(b.lo, b.hi, b.weight, b.origin);
    });
    std::vector<DualSegment> out;
    for (const auto& s : segs)
        if (out.empty() || out.back().lo != s.lo || out.back().hi != s.hi)
            out.push_back(s);
    return out;
}

// Drop every segment strictly contained in a no-heavier one; such segments
// can never appear in an optimal coverage. Input must be deduplicated.
inline std::vector<DualSegment> prune_redundant(std::vector<DualSegment> segs, int m) {
    std::sort(segs.begin(), segs.end(), [](const DualSegment& a, const DualSegment& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi > b.hi);
    });

    // Fenwick tree over hi (suffix minima of weights of already-seen
    // segments, which all have lo' <= lo and, among equal lo, hi' > hi).
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> fen(m + 2, kInf);
    auto update = [&](int i, double v) {
        for (i = m + 1 - i; i <= m + 1; i += i & -i)
            fen[i] = std::min(fen[i], v);
    };
    auto suffix_min = [&](int i) {
        double best = kInf;
        for (i = m + 1 - i; i >= 1; i -= i & -i) best = std::min(best, fen[i]);
        return best;
    };

    std::vector<DualSegment> out;
    for (const auto& s : segs) {
        if (suffix_min(s.hi) > s.weight) out.push_back(s);
        update(s.hi, s.weight);
    }
    std::sort(out.begin(), out.end(), segment_order);
    return out;
}

// Dedup plus optional pruning, the standard post-pass of every generator.
inline std::vector<DualSegment> dedup_and_prune(std::vector<DualSegment> segs, int m,
                                                bool prune) {
    segs = dedup_segments(std::move(segs));
    if (prune) segs = prune_redundant(std::move(segs), m);
    return segs;
}

// Map an optimal coverage back to a hitting set. Distinct origins at the
// optimum are a theorem (one segment per point in any optimal coverage);
// a duplicate means a solver bug, so it fails hard rather than patching
// the weight.
inline HitSolution lift_solution(const CoverageSolution& cov,
                                 const std::vector<WeightedPoint>& points) {
    if (cov.status == SolveStatus::Infeasible) return HitSolution::infeasible();

    std::map<int, double> weight_of;
    for (const auto& p : points) weight_of[p.id] = p.w;

    HitSolution out;
    out.status = SolveStatus::Optimal;
    std::vector<int> origins;
    origins.reserve(cov.chosen.size());
    for (const auto& s : cov.chosen) origins.push_back(s.origin);
    std::sort(origins.begin(), origins.end());
    HITSET_CHECK(std::adjacent_find(origins.begin(), origins.end()) == origins.end(),
                 "duplicate origin at optimum");
    for (int id : origins) {
        auto it = weight_of.find(id);
        HITSET_CHECK(it != weight_of.end(), "unknown origin id in coverage solution");
        out.total_weight += it->second;
    }
    out.chosen_points = std::move(origins);
    return out;
}

}  // namespace hitset
