#pragma once

#include <cstdint>
#include <vector>

#include "hitset/core.hpp"

namespace hitset {

namespace detail {

// Exhaustive weighted set cover over arbitrary hit masks; the reference
// optimum every solver is measured against. Lexicographically smallest
// chosen-id set among equal-weight optima.
inline HitSolution oracle_over_masks(const std::vector<double>& weights,
                                     const std::vector<int>& ids,
                                     const std::vector<std::vector<uint64_t>>& masks,
                                     size_t constraint_count) {
    const size_t n = weights.size();
    HITSET_CHECK(n <= 20, "oracle limited to n <= 20 points");
    const size_t words = (constraint_count + 63) / 64;

    std::vector<uint64_t> full(words, 0);
    for (size_t c = 0; c < constraint_count; ++c) full[c / 64] |= uint64_t(1) << (c % 64);

    double best_w = std::numeric_limits<double>::infinity();
    std::vector<int> best_ids;
    bool found = false;

    std::vector<int> cur_ids;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        double w = 0;
        for (size_t i = 0; i < n; ++i)
            if (mask >> i & 1) w += weights[i];
        if (found && w > best_w) continue;

        std::vector<uint64_t> cover(words, 0);
        for (size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                for (size_t t = 0; t < words; ++t) cover[t] |= masks[i][t];
        if (cover != full) continue;

        cur_ids.clear();
        for (size_t i = 0; i < n; ++i)
            if (mask >> i & 1) cur_ids.push_back(ids[i]);
        std::sort(cur_ids.begin(), cur_ids.end());
        if (!found || w < best_w || (w == best_w && cur_ids < best_ids)) {
            found = true;
            best_w = w;
            best_ids = cur_ids;
        }
    }
    if (!found) return HitSolution::infeasible();
    HitSolution out;
    out.status = SolveStatus::Optimal;
    out.total_weight = best_w;
    out.chosen_points = std::move(best_ids);
    return out;
}

}  // namespace detail

// Exact optimum by subset enumeration; n <= 20.
inline HitSolution oracle_optimal(const Instance& inst) {
    const size_t n = inst.points.size();
    const size_t m = inst.disks.size();
    if (m == 0) {
        HitSolution out;
        out.status = SolveStatus::Optimal;
        return out;
    }
    std::vector<double> w(n);
    std::vector<int> ids(n);
    std::vector<std::vector<uint64_t>> masks(n, std::vector<uint64_t>((m + 63) / 64, 0));
    for (size_t i = 0; i < n; ++i) {
        w[i] = inst.points[i].w;
        ids[i] = inst.points[i].id;
        for (size_t j = 0; j < m; ++j)
            if (hits(inst.points[i], inst.disks[j], inst.metric))
                masks[i][j / 64] |= uint64_t(1) << (j % 64);
    }
    return detail::oracle_over_masks(w, ids, masks, m);
}

// Check a claimed solution: an optimal claim must hit every disk with the
// stated weight; an infeasible claim must name a genuinely unhittable disk
// set (some disk no point of P hits).
inline bool verify(const Instance& inst, const HitSolution& sol) {
    if (sol.status == SolveStatus::Infeasible) {
        for (const auto& s : inst.disks) {
            bool hit_any = false;
            for (const auto& p : inst.points)
                if (hits(p, s, inst.metric)) {
                    hit_any = true;
                    break;
                }
            if (!hit_any) return true;
        }
        return false;
    }

    double total = 0;
    std::vector<const WeightedPoint*> chosen;
    for (int id : sol.chosen_points) {
        const WeightedPoint* found = nullptr;
        for (const auto& p : inst.points)
            if (p.id == id) {
                found = &p;
                break;
            }
        if (!found) return false;
        chosen.push_back(found);
        total += found->w;
    }
    if (!near(total, sol.total_weight)) return false;
    for (const auto& s : inst.disks) {
        bool ok = false;
        for (const auto* p : chosen)
            if (hits(*p, s, inst.metric)) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

}  // namespace hitset
