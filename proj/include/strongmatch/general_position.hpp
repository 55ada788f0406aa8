#pragma once

// Shape-specific general position checks (report-only).
//
// Square mode note: the "no four points on the boundary of any homothet"
// clause is checked on the canonical smallest squares of all pairs only;
// enumerating all homothets is ill-posed.

#include <string>
#include <vector>

#include "strongmatch/homothet.hpp"
#include "strongmatch/kernels.hpp"

namespace strongmatch {

enum class GpMode { Disk, Triangle, Square };

inline const char* to_string(GpMode m) {
    switch (m) {
        case GpMode::Disk: return "disk";
        case GpMode::Triangle: return "triangle";
        case GpMode::Square: return "square";
    }
    return "?";
}

struct GpViolation {
    std::vector<int> indices;
    std::string rule;
};

struct GeneralPositionReport {
    GpMode mode{GpMode::Disk};
    std::vector<GpViolation> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {

template <class S>
void four_on_boundary(const std::vector<Pt<S>>& pts, const Homothet<S>& h,
                      const char* rule, std::vector<GpViolation>& out) {
    std::vector<int> on;
    for (int k = 0; k < static_cast<int>(pts.size()); ++k)
        if (on_boundary(h, pts[k])) on.push_back(k);
    if (on.size() >= 4) out.push_back({on, rule});
}

}  // namespace detail

template <class S>
GeneralPositionReport check_general_position(const std::vector<Pt<S>>& pts, GpMode mode) {
    GeneralPositionReport rep;
    rep.mode = mode;
    const int n = static_cast<int>(pts.size());

    if (mode == GpMode::Triangle) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (pred_eq(pts[i].u(), pts[j].u()))
                    rep.violations.push_back({{i, j}, "pair direction 0 deg"});
                else if (pred_eq(pts[i].w(), pts[j].w()))
                    rep.violations.push_back({{i, j}, "pair direction 60 deg"});
                else if (pred_eq(pts[i].v(), pts[j].v()))
                    rep.violations.push_back({{i, j}, "pair direction 120 deg"});
            }
        }
        return rep;
    }

    if (mode == GpMode::Square) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (pred_eq(pts[i].x, pts[j].x))
                    rep.violations.push_back({{i, j}, "equal x"});
                else if (pred_eq(pts[i].y, pts[j].y))
                    rep.violations.push_back({{i, j}, "equal y"});
            }
        }
        if (!rep.violations.empty()) return rep;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                detail::four_on_boundary(pts, smallest_homothet(pts[i], pts[j], ShapeKind::Square),
                                         "four on square boundary", rep.violations);
        return rep;
    }

    // disk mode: 4-point cocircularity on diametral disks of all pairs
    if constexpr (!scalar_traits<S>::exact) {
        kernels::PointSoA soa;
        for (const auto& p : pts) soa.push_back(p.x, p.y);
        const auto& K = kernels::active();
        const double eps = scalar_traits<double>::tol();
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                auto d = smallest_disk(pts[i], pts[j]);
                double r = d.radius_double();
                if (K.disk_boundary_count(soa.view(), d.center.x, d.center.y, r, eps) >= 4)
                    detail::four_on_boundary(pts, d, "four on disk boundary", rep.violations);
            }
        }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                detail::four_on_boundary(pts, smallest_disk(pts[i], pts[j]),
                                         "four on disk boundary", rep.violations);
    }
    return rep;
}

}  // namespace strongmatch
