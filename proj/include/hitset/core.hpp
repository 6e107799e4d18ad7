#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hitset {

// Thrown when an internal structural invariant fails (a solver bug, never
// a bad input).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Thrown when an instance is too degenerate for the sweep machinery
// (near-coincident events, near-tangent boundaries).
struct degeneracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define HITSET_CHECK(cond, msg)                                        \
    do {                                                               \
        if (!(cond)) throw ::hitset::internal_error(std::string(msg)); \
    } while (0)

inline constexpr double kRelTol = 1e-9;

// Relative closeness at the 1e-9 scale used by all degeneracy checks.
inline bool near(double a, double b) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= kRelTol * scale;
}

enum class Metric { OneD, Unit, L1, L2, Linf };

inline const char* metric_name(Metric m) {
    switch (m) {
        case Metric::OneD: return "1d";
        case Metric::Unit: return "unit";
        case Metric::L1: return "l1";
        case Metric::L2: return "l2";
        case Metric::Linf: return "linf";
    }
    return "?";
}

struct WeightedPoint {
    double x = 0;
    double y = 0;
    double w = 1;
    int id = -1;  // index in the input file, stable across sorting
};

// A disk centered on the x-axis. The shape depends on the metric; the
// extent [left,right] is its intersection with the axis in every metric.
struct Disk {
    double center_x = 0;
    double radius = 0;
    int id = -1;

    double left() const { return center_x - radius; }
    double right() const { return center_x + radius; }
    // Ordinate of the top edge of the square in the L-infinity metric.
    double top() const { return radius; }
};

struct Instance {
    Metric metric = Metric::L2;
    std::vector<WeightedPoint> points;  // sorted by x after normalize()
    std::vector<Disk> disks;            // sorted by center_x after normalize()
};

// Strict interior test. Boundary points are rejected by validate(), so the
// open/closed distinction never matters on accepted inputs.
inline bool hits(const WeightedPoint& p, const Disk& s, Metric metric) {
    const double dx = p.x - s.center_x;
    switch (metric) {
        case Metric::OneD:
            return s.left() < p.x && p.x < s.right();
        case Metric::Unit:
        case Metric::L2:
            return dx * dx + p.y * p.y < s.radius * s.radius;
        case Metric::L1:
            return std::abs(dx) + std::abs(p.y) < s.radius;
        case Metric::Linf:
            return std::max(std::abs(dx), std::abs(p.y)) < s.radius;
    }
    return false;
}

// Signed-agnostic distance of p from the boundary of s in the given metric,
// used only for the near-boundary degeneracy check.
inline double boundary_gap(const WeightedPoint& p, const Disk& s, Metric metric) {
    const double dx = p.x - s.center_x;
    switch (metric) {
        case Metric::OneD:
            return std::min(std::abs(p.x - s.left()), std::abs(p.x - s.right()));
        case Metric::Unit:
        case Metric::L2:
            return std::abs(std::sqrt(dx * dx + p.y * p.y) - s.radius);
        case Metric::L1:
            return std::abs(std::abs(dx) + std::abs(p.y) - s.radius);
        case Metric::Linf:
            return std::abs(std::max(std::abs(dx), std::abs(p.y)) - s.radius);
    }
    return 0;
}

// Points below the axis are reflected onto it; everything is then sorted.
// Idempotent, ids untouched.
inline Instance normalize(Instance inst) {
    for (auto& p : inst.points)
        if (p.y < 0) p.y = -p.y;
    std::sort(inst.points.begin(), inst.points.end(),
              [](const WeightedPoint& a, const WeightedPoint& b) {
                  return a.x < b.x || (a.x == b.x && a.id < b.id);
              });
    std::sort(inst.disks.begin(), inst.disks.end(), [](const Disk& a, const Disk& b) {
        return a.center_x < b.center_x || (a.center_x == b.center_x && a.id < b.id);
    });
    return inst;
}

enum class ViolationKind {
    NonpositiveWeight,
    NonpositiveRadius,
    NonFinite,
    DuplicatePointX,
    CoincidentEndpoints,
    PointOnBoundary,
    PointOffAxis,    // 1D metric requires y == 0
    UnequalRadii,    // unit metric requires a common radius
};

struct Violation {
    ViolationKind kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const {
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty()) s += "; ";
            s += v.detail;
        }
        return s;
    }
};

// General-position validation per the model assumptions: distinct point
// abscissae, distinct extent endpoints, no point within tolerance of a disk
// boundary, positive weights and radii. Expects a normalized instance.
inline ValidationReport validate(const Instance& inst) {
    ValidationReport rep;
    auto add = [&](ViolationKind k, std::string d) {
        rep.violations.push_back({k, std::move(d)});
    };

    for (const auto& p : inst.points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.w))
            add(ViolationKind::NonFinite, "non-finite coordinate or weight on point " + std::to_string(p.id));
        else if (p.w <= 0)
            add(ViolationKind::NonpositiveWeight,
                "nonpositive weight on point " + std::to_string(p.id));
        if (inst.metric == Metric::OneD && p.y != 0)
            add(ViolationKind::PointOffAxis, "1d point " + std::to_string(p.id) + " has y != 0");
    }
    for (const auto& s : inst.disks) {
        if (!std::isfinite(s.center_x) || !std::isfinite(s.radius))
            add(ViolationKind::NonFinite, "non-finite disk " + std::to_string(s.id));
        else if (s.radius <= 0)
            add(ViolationKind::NonpositiveRadius,
                "nonpositive radius on disk " + std::to_string(s.id));
    }
    if (inst.metric == Metric::Unit && !inst.disks.empty()) {
        const double r0 = inst.disks.front().radius;
        for (const auto& s : inst.disks)
            if (s.radius != r0) {
                add(ViolationKind::UnequalRadii, "unit metric with unequal radii");
                break;
            }
    }

    for (size_t i = 1; i < inst.points.size(); ++i)
        if (near(inst.points[i - 1].x, inst.points[i].x))
            add(ViolationKind::DuplicatePointX,
                "points " + std::to_string(inst.points[i - 1].id) + " and " +
                    std::to_string(inst.points[i].id) + " share x");

    std::vector<std::pair<double, int>> ends;
    ends.reserve(inst.disks.size() * 2);
    for (const auto& s : inst.disks) {
        ends.emplace_back(s.left(), s.id);
        ends.emplace_back(s.right(), s.id);
    }
    std::sort(ends.begin(), ends.end());
    for (size_t i = 1; i < ends.size(); ++i)
        if (near(ends[i - 1].first, ends[i].first))
            add(ViolationKind::CoincidentEndpoints,
                "coincident extent endpoints of disks " + std::to_string(ends[i - 1].second) +
                    " and " + std::to_string(ends[i].second));

    for (const auto& p : inst.points)
        for (const auto& s : inst.disks) {
            const double scale = std::max({1.0, s.radius, std::abs(p.x - s.center_x), std::abs(p.y)});
            if (boundary_gap(p, s, inst.metric) <= kRelTol * scale)
                add(ViolationKind::PointOnBoundary,
                    "point " + std::to_string(p.id) + " on boundary of disk " +
                        std::to_string(s.id));
        }
    return rep;
}

enum class SolveStatus { Optimal, Infeasible };

// A hitting-set answer: chosen input point ids (ascending) and their total
// weight.
struct HitSolution {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<int> chosen_points;
    double total_weight = 0;

    static HitSolution infeasible() { return HitSolution{}; }
};

}  // namespace hitset
