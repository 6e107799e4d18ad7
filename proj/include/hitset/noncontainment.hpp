#pragma once

#include <utility>
#include <vector>

#include "hitset/core.hpp"

namespace hitset {

struct NonContainmentResult {
    std::vector<Disk> kept;  // sorted by center; left and right extents both increasing
    // (removed disk id, id of one kept disk it contains)
    std::vector<std::pair<int, int>> redundant_map;
};

// Generic extent-containment filter. Removes every interval that contains
// another interval; returns indices of survivors in order of increasing
// left endpoint, plus (removed index, witness index) pairs.
//
// Works on any family with pairwise distinct endpoints: a disk contains
// another iff its extent on the axis does.
struct ExtentFilter {
    std::vector<size_t> kept;
    std::vector<std::pair<size_t, size_t>> removed;  // (container, containee witness)
};

inline ExtentFilter filter_containing_extents(const std::vector<double>& left,
                                              const std::vector<double>& right) {
    const size_t m = left.size();
    std::vector<size_t> order(m);
    for (size_t i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return left[a] < left[b]; });

    // Interval k (in left-sorted order) contains somebody iff some interval
    // with a larger left endpoint ends before it does; the suffix argmin of
    // right endpoints is such a containee and is itself never a container.
    std::vector<size_t> suffix_argmin(m + 1, m);
    for (size_t i = m; i-- > 0;) {
        size_t best = suffix_argmin[i + 1];
        suffix_argmin[i] =
            (best == m || right[order[i]] < right[best]) ? order[i] : best;
    }

    ExtentFilter out;
    for (size_t i = 0; i < m; ++i) {
        const size_t idx = order[i];
        const size_t witness = suffix_argmin[i + 1];
        if (witness != m && right[witness] < right[idx])
            out.removed.emplace_back(idx, witness);
        else
            out.kept.push_back(idx);
    }
    return out;
}

// Compute the Non-Containment subset: drop exactly the disks whose extent
// contains another disk's extent. O(m log m).
inline NonContainmentResult noncontainment_subset(const std::vector<Disk>& disks) {
    std::vector<double> l(disks.size()), r(disks.size());
    for (size_t i = 0; i < disks.size(); ++i) {
        l[i] = disks[i].left();
        r[i] = disks[i].right();
    }
    ExtentFilter f = filter_containing_extents(l, r);
    NonContainmentResult res;
    res.kept.reserve(f.kept.size());
    for (size_t idx : f.kept) res.kept.push_back(disks[idx]);
    for (auto [container, containee] : f.removed)
        res.redundant_map.emplace_back(disks[container].id, disks[containee].id);
    return res;
}

// Non-Containment property: left and right extent orders coincide.
inline bool check_noncontainment(const std::vector<Disk>& disks) {
    for (size_t i = 1; i < disks.size(); ++i)
        if (!(disks[i - 1].left() < disks[i].left() &&
              disks[i - 1].right() < disks[i].right()))
            return false;
    return true;
}

}  // namespace hitset
