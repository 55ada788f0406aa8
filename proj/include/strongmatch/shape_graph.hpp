#pragma once

// Reference constructions of G_S(P) as weighted edge lists.  Brute force on
// purpose (desk scale); the double-precision emptiness scans go through the
// kernel table.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "strongmatch/homothet.hpp"
#include "strongmatch/kernels.hpp"

namespace strongmatch {

template <class S>
struct GraphEdge {
    int i{}, j{};
    S weight{};
    Homothet<S> rep;
};

template <class S>
struct ShapeGraph {
    ShapeKind kind{};
    int n{};
    std::vector<GraphEdge<S>> edges;  // ordered by (i, j), i < j

    bool has_edge(int a, int b) const {
        if (a > b) std::swap(a, b);
        for (const auto& e : edges)
            if (e.i == a && e.j == b) return true;
        return false;
    }
};

namespace detail {

template <class S>
bool open_interior_blocked(const std::vector<Pt<S>>& pts, const kernels::PointSoA* soa,
                           int i, int j, const Homothet<S>& h) {
    if constexpr (!scalar_traits<S>::exact) {
        const auto& K = kernels::active();
        const double eps = scalar_traits<double>::tol();
        auto view = soa->view();
        switch (h.kind) {
            case ShapeKind::Disk:
                return K.any_in_open_disk(view, i, j, h.center.x, h.center.y, h.radius_double(), eps);
            case ShapeKind::TriDown:
                return K.any_in_open_tri_down(view, i, j, h.a, h.b, h.c, eps);
            case ShapeKind::TriUp:
                return K.any_in_open_tri_up(view, i, j, h.a, h.b, h.c, eps);
            case ShapeKind::Square:
                return K.any_in_open_square(view, i, j, h.x0, h.y0, h.side, eps);
        }
        return false;
    } else {
        for (int k = 0; k < static_cast<int>(pts.size()); ++k) {
            if (k == i || k == j) continue;
            if (contains_open(h, pts[k])) return true;
        }
        return false;
    }
}

template <class S>
std::optional<kernels::PointSoA> make_soa(const std::vector<Pt<S>>& pts) {
    if constexpr (scalar_traits<S>::exact) {
        return std::nullopt;
    } else {
        kernels::PointSoA soa;
        for (const auto& p : pts) soa.push_back(p.x, p.y);
        return soa;
    }
}

}  // namespace detail

// Lowest offset of the smallest-square family of (i, j) whose open interior
// avoids every other point, or nullopt when the exclusions cover the whole
// feasible interval.
template <class S>
std::optional<Homothet<S>> empty_square_representative(const std::vector<Pt<S>>& pts, int i, int j) {
    const auto f = square_family(pts[i], pts[j]);
    // open exclusion interval of the free offset per blocking point
    std::vector<std::pair<S, S>> excl;
    const S eps = scalar_traits<S>::tol();
    for (int k = 0; k < static_cast<int>(pts.size()); ++k) {
        if (k == i || k == j) continue;
        const S fixed = f.x_dominant ? pts[k].x : pts[k].y;
        if (!(fixed > f.fixed_lo + eps && fixed < f.fixed_lo + f.side - eps)) continue;
        const S free = f.x_dominant ? pts[k].y : pts[k].x;
        excl.emplace_back(free - f.side + eps, free - eps);
    }
    std::sort(excl.begin(), excl.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    S t = f.free_lo;
    for (const auto& [lo, hi] : excl) {
        if (t > f.free_hi) return std::nullopt;
        if (lo < t && t < hi) t = hi;
    }
    if (t > f.free_hi) return std::nullopt;
    return square_at_offset(f, t);
}

template <class S>
ShapeGraph<S> build_gabriel(const std::vector<Pt<S>>& pts) {
    ShapeGraph<S> g{ShapeKind::Disk, static_cast<int>(pts.size()), {}};
    auto soa = detail::make_soa(pts);
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
            auto d = smallest_disk(pts[i], pts[j]);
            if (!detail::open_interior_blocked(pts, soa ? &*soa : nullptr, i, j, d))
                g.edges.push_back({i, j, d.scale(), d});
        }
    }
    return g;
}

// Cone classification of the direction q - p.  Even cones C2, C4, C6 hold the
// downward-triangle neighbors; odd cones the upward ones.
template <class S>
int cone_index(const Pt<S>& p, const Pt<S>& q) {
    const S du = q.u() - p.u(), dv = q.v() - p.v(), dw = q.w() - p.w();
    const S z(0);
    const bool up = du > z, vp = dv > z, wp = dw > z;
    if (up && !vp && wp) return 1;
    if (up && !vp && !wp) return 2;
    if (up && vp && !wp) return 3;
    if (!up && vp && !wp) return 4;
    if (!up && vp && wp) return 5;
    if (!up && !vp && wp) return 6;
    return 0;  // degenerate direction (on a cone boundary; general position excludes this)
}

namespace detail {

template <class S>
ShapeGraph<S> build_cone_rule(const std::vector<Pt<S>>& pts, bool down) {
    const int n = static_cast<int>(pts.size());
    ShapeGraph<S> g{down ? ShapeKind::TriDown : ShapeKind::TriUp, n, {}};
    std::set<std::pair<int, int>> chosen;
    for (int p = 0; p < n; ++p) {
        // best (scale, index) per cone; even cones for down, odd for up
        for (int target = 0; target < 3; ++target) {
            const int cone = down ? 2 + 2 * target : 1 + 2 * target;
            int best = -1;
            S best_scale{};
            for (int q = 0; q < n; ++q) {
                if (q == p || cone_index(pts[p], pts[q]) != cone) continue;
                S sc = down ? smallest_tri_down(pts[p], pts[q]).scale()
                            : smallest_tri_up(pts[p], pts[q]).scale();
                if (best < 0 || sc < best_scale || (sc == best_scale && q < best)) {
                    best = q;
                    best_scale = sc;
                }
            }
            if (best >= 0) chosen.emplace(std::min(p, best), std::max(p, best));
        }
    }
    for (const auto& [i, j] : chosen) {
        auto rep = down ? smallest_tri_down(pts[i], pts[j]) : smallest_tri_up(pts[i], pts[j]);
        g.edges.push_back({i, j, rep.scale(), rep});
    }
    return g;
}

}  // namespace detail

template <class S>
ShapeGraph<S> build_tri_down(const std::vector<Pt<S>>& pts) {
    return detail::build_cone_rule(pts, true);
}

template <class S>
ShapeGraph<S> build_tri_up(const std::vector<Pt<S>>& pts) {
    return detail::build_cone_rule(pts, false);
}

template <class S>
ShapeGraph<S> build_theta_six(const std::vector<Pt<S>>& pts) {
    auto gd = build_tri_down(pts);
    auto gu = build_tri_up(pts);
    ShapeGraph<S> g{ShapeKind::TriDown, static_cast<int>(pts.size()), {}};
    std::set<std::pair<int, int>> keys;
    for (const auto& e : gd.edges) keys.emplace(e.i, e.j);
    for (const auto& e : gu.edges) keys.emplace(e.i, e.j);
    for (const auto& [i, j] : keys) {
        auto td = smallest_tri_down(pts[i], pts[j]);
        auto tu = smallest_tri_up(pts[i], pts[j]);
        bool in_d = gd.has_edge(i, j), in_u = gu.has_edge(i, j);
        Homothet<S> rep;
        if (in_d && in_u) rep = (tu.scale() < td.scale()) ? tu : td;
        else rep = in_d ? td : tu;
        g.edges.push_back({i, j, rep.scale(), rep});
    }
    return g;
}

template <class S>
ShapeGraph<S> build_linf_delaunay(const std::vector<Pt<S>>& pts) {
    ShapeGraph<S> g{ShapeKind::Square, static_cast<int>(pts.size()), {}};
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
            if (auto rep = empty_square_representative(pts, i, j))
                g.edges.push_back({i, j, rep->scale(), *rep});
        }
    }
    return g;
}

template <class S>
ShapeGraph<S> build_shape_graph(const std::vector<Pt<S>>& pts, ShapeKind kind) {
    switch (kind) {
        case ShapeKind::Disk: return build_gabriel(pts);
        case ShapeKind::TriDown: return build_tri_down(pts);
        case ShapeKind::TriUp: return build_tri_up(pts);
        case ShapeKind::Square: return build_linf_delaunay(pts);
    }
    throw std::invalid_argument("build_shape_graph: bad kind");
}

}  // namespace strongmatch
