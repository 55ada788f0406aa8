#pragma once

// Shared test helpers: seeded instances and small independent oracles that
// deliberately avoid the production code paths they check.

#include <vector>

#include "strongmatch/rng.hpp"
#include "strongmatch/shape_graph.hpp"

namespace smtest {

using namespace strongmatch;

inline std::vector<Point> random_points(int n, std::uint64_t seed, GpMode mode) {
    return generate_points(n, seed, mode);
}

// Emptiness-defined edge set, straight from the definition (no kernels).
inline bool edge_by_emptiness(const std::vector<Point>& pts, int i, int j, ShapeKind kind) {
    if (kind == ShapeKind::Square) return empty_square_representative(pts, i, j).has_value();
    auto h = smallest_homothet(pts[i], pts[j], kind);
    for (int k = 0; k < static_cast<int>(pts.size()); ++k) {
        if (k == i || k == j) continue;
        if (contains_open(h, pts[k])) return false;
    }
    return true;
}

// Proper segment crossing (shared endpoints do not count).
inline bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    auto orient = [](const Point& p, const Point& q, const Point& r) {
        double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
        return v > 1e-12 ? 1 : v < -1e-12 ? -1 : 0;
    };
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 && o1 != o2 && o3 != o4;
}

template <class S>
bool graph_is_plane(const std::vector<Pt<S>>& pts, const ShapeGraph<S>& g) {
    for (std::size_t a = 0; a < g.edges.size(); ++a) {
        for (std::size_t b = a + 1; b < g.edges.size(); ++b) {
            const auto& e = g.edges[a];
            const auto& f = g.edges[b];
            if (e.i == f.i || e.i == f.j || e.j == f.i || e.j == f.j) continue;
            Point p0{scalar_traits<S>::to_double(pts[e.i].x), scalar_traits<S>::to_double(pts[e.i].y)};
            Point p1{scalar_traits<S>::to_double(pts[e.j].x), scalar_traits<S>::to_double(pts[e.j].y)};
            Point p2{scalar_traits<S>::to_double(pts[f.i].x), scalar_traits<S>::to_double(pts[f.i].y)};
            Point p3{scalar_traits<S>::to_double(pts[f.j].x), scalar_traits<S>::to_double(pts[f.j].y)};
            if (segments_cross(p0, p1, p2, p3)) return false;
        }
    }
    return true;
}

// Dense grid over one triangle, membership-tested in the other.
inline bool grid_overlap(const Homothet<double>& h1, const Homothet<double>& h2, int density = 60) {
    auto vs = tri_vertices(h1);
    for (int a = 0; a <= density; ++a) {
        for (int b = 0; b <= density - a; ++b) {
            double la = static_cast<double>(a) / density;
            double lb = static_cast<double>(b) / density;
            double lc = 1.0 - la - lb;
            Point p{la * vs[0].x + lb * vs[1].x + lc * vs[2].x,
                    la * vs[0].y + lb * vs[1].y + lc * vs[2].y};
            if (contains_closed(h1, p) && contains_closed(h2, p)) return true;
        }
    }
    return false;
}

// Triangle shrunk toward its barycenter by a scale margin (test-only).
inline Homothet<double> shrink_triangle(const Homothet<double>& h, double d) {
    double third = d / 3.0;
    if (h.kind == ShapeKind::TriDown)
        return Homothet<double>::tri_down(h.a - third, h.b - third, h.c - third);
    return Homothet<double>::tri_up(h.a - third, h.b - third, h.c - third);
}

}  // namespace smtest
