#pragma once

#include <deque>
#include <set>
#include <vector>

#include "hitset/core.hpp"
#include "hitset/coverage.hpp"

namespace hitset {

// 1D sweep: disks enter the active queue at their left endpoint and, by the
// Non-Containment property, leave strictly in FIFO order at their right
// endpoint. A point's segment is the whole queue. At most one segment per
// point.
inline std::vector<DualSegment> dual_segments_1d(const std::vector<WeightedPoint>& points,
                                                 const std::vector<Disk>& disks) {
    struct Event {
        double x;
        int kind;  // 0 = disk left, 1 = point, 2 = disk right
        int idx;
    };
    std::vector<Event> events;
    events.reserve(points.size() + 2 * disks.size());
    for (int j = 0; j < static_cast<int>(disks.size()); ++j) {
        events.push_back({disks[j].left(), 0, j});
        events.push_back({disks[j].right(), 2, j});
    }
    for (int i = 0; i < static_cast<int>(points.size()); ++i)
        events.push_back({points[i].x, 1, i});
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        return a.x < b.x || (a.x == b.x && a.kind < b.kind);
    });

    std::vector<DualSegment> out;
    std::deque<int> active;  // 1-based disk indices, contiguous by construction
    for (const auto& ev : events) {
        switch (ev.kind) {
            case 0:
                active.push_back(ev.idx + 1);
                break;
            case 2:
                HITSET_CHECK(!active.empty() && active.front() == ev.idx + 1,
                             "1d sweep queue is not FIFO; input lacks Non-Containment");
                active.pop_front();
                break;
            default:
                if (!active.empty())
                    out.push_back({active.front(), active.back(), points[ev.idx].w,
                                   points[ev.idx].id});
        }
    }
    return out;
}

// Unit-disk case: p hits s_j iff the chord of the unit disk around p covers
// the center of s_j, so each point's hit set is one binary-searchable run of
// centers.
inline std::vector<DualSegment> dual_segments_unit(const std::vector<WeightedPoint>& points,
                                                   const std::vector<Disk>& disks) {
    std::vector<DualSegment> out;
    if (disks.empty()) return out;
    const double r = disks.front().radius;
    std::vector<double> centers(disks.size());
    for (size_t j = 0; j < disks.size(); ++j) {
        HITSET_CHECK(disks[j].radius == r, "unit generator needs a common radius");
        centers[j] = disks[j].center_x;
    }
    for (const auto& p : points) {
        const double h2 = r * r - p.y * p.y;
        if (h2 <= 0) continue;  // too high to reach any disk
        const double d = std::sqrt(h2);
        const int lo = static_cast<int>(
            std::upper_bound(centers.begin(), centers.end(), p.x - d) - centers.begin());
        const int hi = static_cast<int>(
            std::lower_bound(centers.begin(), centers.end(), p.x + d) - centers.begin());
        if (lo < hi) out.push_back({lo + 1, hi, p.w, p.id});
    }
    return out;
}

// L1 sweep (diamonds). Two status trees hold the upper-left and upper-right
// edges crossing the sweep line; edges of slope +-1 never change relative
// order, so keys are the static endpoint abscissae:
//   upper-left edge of s_j at x has height x - left_j   (T_L keyed by left)
//   upper-right edge of s_j at x has height right_j - x (T_R keyed by right)
// At a point, the lowest edge above it in each tree delimits its unique run.
inline std::vector<DualSegment> dual_segments_l1(const std::vector<WeightedPoint>& points,
                                                 const std::vector<Disk>& disks) {
    struct Event {
        double x;
        int kind;  // 0 = left endpoint, 1 = center, 2 = point, 3 = right endpoint
        int idx;
    };
    std::vector<Event> events;
    events.reserve(points.size() + 3 * disks.size());
    for (int j = 0; j < static_cast<int>(disks.size()); ++j) {
        events.push_back({disks[j].left(), 0, j});
        events.push_back({disks[j].center_x, 1, j});
        events.push_back({disks[j].right(), 3, j});
    }
    for (int i = 0; i < static_cast<int>(points.size()); ++i)
        events.push_back({points[i].x, 2, i});
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        return a.x < b.x || (a.x == b.x && a.kind < b.kind);
    });

    std::set<std::pair<double, int>> tl;  // (left endpoint, 1-based index)
    std::set<std::pair<double, int>> tr;  // (right endpoint, 1-based index)
    std::vector<DualSegment> out;

    for (const auto& ev : events) {
        const int j1b = ev.idx + 1;
        switch (ev.kind) {
            case 0:
                tl.insert({disks[ev.idx].left(), j1b});
                break;
            case 1:
                tl.erase({disks[ev.idx].left(), j1b});
                tr.insert({disks[ev.idx].right(), j1b});
                break;
            case 3:
                tr.erase({disks[ev.idx].right(), j1b});
                break;
            default: {
                const auto& p = points[ev.idx];
                // lowest upper-right edge above p: smallest right > x + y
                int kr = 0;
                auto itr = tr.upper_bound({p.x + p.y, INT_MAX});
                if (itr != tr.end()) kr = itr->second;
                // lowest upper-left edge above p: largest left < x - y
                int kl = 0;
                auto itl = tl.lower_bound({p.x - p.y, INT_MIN});
                if (itl != tl.begin()) kl = std::prev(itl)->second;

                int lo = 0, hi = 0;
                if (kr && kl) {
                    lo = kr;
                    hi = kl;
                } else if (kr) {
                    lo = kr;
                    hi = tr.rbegin()->second;  // highest edge of T_R
                } else if (kl) {
                    lo = tl.begin()->second;  // highest edge of T_L
                    hi = kl;
                } else {
                    break;
                }
                HITSET_CHECK(lo <= hi, "l1 sweep produced an inverted run");
                out.push_back({lo, hi, p.w, p.id});
            }
        }
    }
    return out;
}

}  // namespace hitset
