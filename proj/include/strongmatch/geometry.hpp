#pragma once

// Points, cone functionals and the rigid maps used by the recursive
// partition engines.
//
// The three cone functionals are the linear forms
//   u(p) = y,   v(p) = (-sqrt3*x - y)/2,   w(p) = (sqrt3*x - y)/2,
// so u + v + w = 0 identically.  Their level lines run at 0, 120 and 60
// degrees; upper level sets carve downward equilateral triangles, which
// makes every triangle predicate a three-way linear comparison.

#include <cstddef>
#include <vector>

#include "strongmatch/scalar.hpp"

namespace strongmatch {

template <class S>
struct Pt {
    S x{};
    S y{};

    S u() const { return y; }
    S v() const { return scalar_traits<S>::half(-scalar_traits<S>::sqrt3() * x - y); }
    S w() const { return scalar_traits<S>::half(scalar_traits<S>::sqrt3() * x - y); }
};

template <class S>
Pt<S> operator+(const Pt<S>& a, const Pt<S>& b) { return {a.x + b.x, a.y + b.y}; }
template <class S>
Pt<S> operator-(const Pt<S>& a, const Pt<S>& b) { return {a.x - b.x, a.y - b.y}; }

template <class S>
bool same_point(const Pt<S>& a, const Pt<S>& b) { return a.x == b.x && a.y == b.y; }

template <class S>
Pt<S> midpoint(const Pt<S>& a, const Pt<S>& b) {
    return {scalar_traits<S>::half(a.x + b.x), scalar_traits<S>::half(a.y + b.y)};
}

using Point = Pt<double>;

template <class S>
std::vector<Pt<S>> to_scalar_points(const std::vector<Point>& pts) {
    std::vector<Pt<S>> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(Pt<S>{S(p.x), S(p.y)});
    return out;
}

template <>
inline std::vector<Pt<double>> to_scalar_points<double>(const std::vector<Point>& pts) {
    return pts;
}

// Rigid map z -> M z + t with M restricted to the symmetries we need:
// reflections and rotations by multiples of 60 degrees, all of which keep
// entries inside Q[sqrt3].
template <class S>
struct Isometry {
    S m00{1}, m01{0}, m10{0}, m11{1};
    S tx{0}, ty{0};

    static Isometry identity() { return {}; }

    static Isometry rotation60(int k, const Pt<S>& center) {
        // cos/sin of 60*k degrees from the table {1, 1/2, -1/2, -1, ...}
        static const int cs_num[6] = {2, 1, -1, -2, -1, 1};   // 2*cos
        static const int sn_sgn[6] = {0, 1, 1, 0, -1, -1};    // sign of sin; |sin| = sqrt3/2 or 0
        k = ((k % 6) + 6) % 6;
        S c = scalar_traits<S>::half(S(cs_num[k]));
        S s = (sn_sgn[k] == 0) ? S(0)
                               : scalar_traits<S>::half(S(sn_sgn[k]) * scalar_traits<S>::sqrt3());
        Isometry g;
        g.m00 = c; g.m01 = -s; g.m10 = s; g.m11 = c;
        g.tx = center.x - (c * center.x - s * center.y);
        g.ty = center.y - (s * center.x + c * center.y);
        return g;
    }

    static Isometry mirror_x(const S& x0) {  // reflect across vertical line x = x0
        Isometry g;
        g.m00 = S(-1); g.m11 = S(1);
        g.tx = x0 + x0;
        return g;
    }

    static Isometry mirror_y(const S& y0) {  // reflect across horizontal line y = y0
        Isometry g;
        g.m00 = S(1); g.m11 = S(-1);
        g.ty = y0 + y0;
        return g;
    }

    static Isometry transpose_about(const Pt<S>& c) {  // reflect across the 45-degree line through c
        Isometry g;
        g.m00 = S(0); g.m01 = S(1); g.m10 = S(1); g.m11 = S(0);
        g.tx = c.x - c.y;
        g.ty = c.y - c.x;
        return g;
    }

    Pt<S> apply(const Pt<S>& p) const {
        return {m00 * p.x + m01 * p.y + tx, m10 * p.x + m11 * p.y + ty};
    }

    Isometry compose(const Isometry& inner) const {  // this after inner
        Isometry g;
        g.m00 = m00 * inner.m00 + m01 * inner.m10;
        g.m01 = m00 * inner.m01 + m01 * inner.m11;
        g.m10 = m10 * inner.m00 + m11 * inner.m10;
        g.m11 = m10 * inner.m01 + m11 * inner.m11;
        g.tx = m00 * inner.tx + m01 * inner.ty + tx;
        g.ty = m10 * inner.tx + m11 * inner.ty + ty;
        return g;
    }

    Isometry inverse() const {
        S det = m00 * m11 - m01 * m10;
        Isometry g;
        g.m00 = m11 / det; g.m01 = S(0) - m01 / det;
        g.m10 = S(0) - m10 / det; g.m11 = m00 / det;
        g.tx = S(0) - (g.m00 * tx + g.m01 * ty);
        g.ty = S(0) - (g.m10 * tx + g.m11 * ty);
        return g;
    }
};

}  // namespace strongmatch
