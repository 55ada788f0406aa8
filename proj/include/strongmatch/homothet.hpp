#pragma once

// The four homothet families and their predicates.
//
//   Disk     center (cx,cy), squared radius r2.  The squared radius is the
//            stored parameter because it stays rational in exact mode; the
//            reported scale is the radius in double mode.
//   TriDown  {z : u(z) <= A, v(z) <= B, w(z) <= C}, scale A+B+C (the height).
//   TriUp    {z : -u(z) <= A, -v(z) <= B, -w(z) <= C}, scale A+B+C.
//   Square   [x0, x0+s] x [y0, y0+s].
//
// Closed predicates answer "do the closed sets meet"; interior predicates
// answer "do the open interiors meet".  Both honor the numeric policy's
// tolerance in double mode.

#include <array>
#include <stdexcept>

#include "strongmatch/geometry.hpp"
#include "strongmatch/scalar.hpp"

namespace strongmatch {

enum class ShapeKind { Disk, TriDown, TriUp, Square };

inline const char* to_string(ShapeKind k) {
    switch (k) {
        case ShapeKind::Disk: return "disk";
        case ShapeKind::TriDown: return "tri-down";
        case ShapeKind::TriUp: return "tri-up";
        case ShapeKind::Square: return "square";
    }
    return "?";
}

inline bool is_triangle(ShapeKind k) { return k == ShapeKind::TriDown || k == ShapeKind::TriUp; }

inline bool same_family(ShapeKind a, ShapeKind b) {
    if (a == b) return true;
    return is_triangle(a) && is_triangle(b);
}

template <class S>
struct Homothet {
    ShapeKind kind{ShapeKind::Disk};
    // Disk
    Pt<S> center{};
    S r2{};
    // Triangles: bounds on (u,v,w) for TriDown, on (-u,-v,-w) for TriUp
    S a{}, b{}, c{};
    // Square
    S x0{}, y0{}, side{};

    static Homothet disk(Pt<S> c, S rsq) {
        Homothet h; h.kind = ShapeKind::Disk; h.center = c; h.r2 = rsq; return h;
    }
    static Homothet tri_down(S A, S B, S C) {
        Homothet h; h.kind = ShapeKind::TriDown; h.a = A; h.b = B; h.c = C; return h;
    }
    static Homothet tri_up(S A, S B, S C) {
        Homothet h; h.kind = ShapeKind::TriUp; h.a = A; h.b = B; h.c = C; return h;
    }
    static Homothet square(S X0, S Y0, S s) {
        Homothet h; h.kind = ShapeKind::Square; h.x0 = X0; h.y0 = Y0; h.side = s; return h;
    }

    // Area-monotone scale, comparable within one family only.
    S scale() const {
        switch (kind) {
            case ShapeKind::Disk:
                if constexpr (scalar_traits<S>::exact) return r2;
                else return std::sqrt(r2);
            case ShapeKind::TriDown:
            case ShapeKind::TriUp: return a + b + c;
            case ShapeKind::Square: return side;
        }
        return S(0);
    }

    double radius_double() const { return std::sqrt(scalar_traits<S>::to_double(r2)); }
};

// y = u, x from u and v (rationalized so it stays in Q[sqrt3])
template <class S>
Pt<S> point_from_uv(const S& u, const S& v) {
    S sqrt3 = scalar_traits<S>::sqrt3();
    S three = S(3);
    Pt<S> p;
    p.y = u;
    p.x = S(0) - (u + v + v) * sqrt3 / three;
    return p;
}

// Vertices of a triangle homothet (TriDown: [top-left, top-right, bottom]).
template <class S>
std::array<Pt<S>, 3> tri_vertices(const Homothet<S>& h) {
    if (h.kind == ShapeKind::TriDown) {
        S u1 = h.a, v1 = h.b;                    // top-left: u=A, v=B
        S u2 = h.a, v2 = S(0) - h.a - h.c;       // top-right: u=A, w=C
        S u3 = S(0) - h.b - h.c, v3 = h.b;       // bottom:    v=B, w=C
        return {point_from_uv(u1, v1), point_from_uv(u2, v2), point_from_uv(u3, v3)};
    }
    if (h.kind == ShapeKind::TriUp) {
        // sides: -u<=A (bottom), -v<=B (upper-right), -w<=C (upper-left)
        S ub = S(0) - h.a;                        // bottom side level
        Pt<S> top = point_from_uv(h.b + h.c, S(0) - h.b);  // -v=B, -w=C
        Pt<S> bl = point_from_uv(ub, h.a + h.c);           // -u=A, -w=C -> v = A+C
        Pt<S> br = point_from_uv(ub, S(0) - h.b);          // -u=A, -v=B
        return {top, bl, br};
    }
    throw std::invalid_argument("tri_vertices: not a triangle");
}

template <class S>
Homothet<S> smallest_disk(const Pt<S>& p, const Pt<S>& q) {
    Pt<S> d = q - p;
    S quarter = scalar_traits<S>::half(scalar_traits<S>::half(S(1)));
    return Homothet<S>::disk(midpoint(p, q), (d.x * d.x + d.y * d.y) * quarter);
}

template <class S>
Homothet<S> smallest_tri_down(const Pt<S>& p, const Pt<S>& q) {
    using std::max;
    return Homothet<S>::tri_down(max(p.u(), q.u()), max(p.v(), q.v()), max(p.w(), q.w()));
}

template <class S>
Homothet<S> smallest_tri_up(const Pt<S>& p, const Pt<S>& q) {
    using std::max;
    return Homothet<S>::tri_up(max(S(0) - p.u(), S(0) - q.u()),
                               max(S(0) - p.v(), S(0) - q.v()),
                               max(S(0) - p.w(), S(0) - q.w()));
}

// The smallest square through p and q is a one-parameter family: the span on
// the dominant axis is pinned, the offset on the other axis slides through a
// closed interval.
template <class S>
struct SquareFamily {
    bool x_dominant{};  // side = |dx| and the free offset is y0 (else symmetric)
    S side{};
    S fixed_lo{};      // x0 when x_dominant, else y0
    S free_lo{}, free_hi{};
};

template <class S>
SquareFamily<S> square_family(const Pt<S>& p, const Pt<S>& q) {
    using std::abs; using std::max; using std::min;
    S adx = abs(q.x - p.x), ady = abs(q.y - p.y);
    SquareFamily<S> f;
    f.x_dominant = !(adx < ady);
    f.side = max(adx, ady);
    if (f.x_dominant) {
        f.fixed_lo = min(p.x, q.x);
        f.free_lo = max(p.y, q.y) - f.side;
        f.free_hi = min(p.y, q.y);
    } else {
        f.fixed_lo = min(p.y, q.y);
        f.free_lo = max(p.x, q.x) - f.side;
        f.free_hi = min(p.x, q.x);
    }
    return f;
}

template <class S>
Homothet<S> square_at_offset(const SquareFamily<S>& f, const S& t) {
    return f.x_dominant ? Homothet<S>::square(f.fixed_lo, t, f.side)
                        : Homothet<S>::square(t, f.fixed_lo, f.side);
}

template <class S>
Homothet<S> smallest_homothet(const Pt<S>& p, const Pt<S>& q, ShapeKind kind) {
    if (same_point(p, q)) throw std::invalid_argument("smallest_homothet: p == q");
    switch (kind) {
        case ShapeKind::Disk: return smallest_disk(p, q);
        case ShapeKind::TriDown: return smallest_tri_down(p, q);
        case ShapeKind::TriUp: return smallest_tri_up(p, q);
        case ShapeKind::Square: {
            auto f = square_family(p, q);
            return square_at_offset(f, scalar_traits<S>::half(f.free_lo + f.free_hi));
        }
    }
    throw std::invalid_argument("smallest_homothet: bad kind");
}

template <class S>
bool contains_closed(const Homothet<S>& h, const Pt<S>& p) {
    switch (h.kind) {
        case ShapeKind::Disk: {
            Pt<S> d = p - h.center;
            if constexpr (scalar_traits<S>::exact) {
                return d.x * d.x + d.y * d.y <= h.r2;
            } else {
                return std::sqrt(d.x * d.x + d.y * d.y) <= std::sqrt(h.r2) + scalar_traits<S>::tol();
            }
        }
        case ShapeKind::TriDown:
            return pred_leq(p.u(), h.a) && pred_leq(p.v(), h.b) && pred_leq(p.w(), h.c);
        case ShapeKind::TriUp:
            return pred_leq(S(0) - p.u(), h.a) && pred_leq(S(0) - p.v(), h.b) &&
                   pred_leq(S(0) - p.w(), h.c);
        case ShapeKind::Square:
            return pred_leq(h.x0, p.x) && pred_leq(p.x, h.x0 + h.side) &&
                   pred_leq(h.y0, p.y) && pred_leq(p.y, h.y0 + h.side);
    }
    return false;
}

template <class S>
bool contains_open(const Homothet<S>& h, const Pt<S>& p) {
    switch (h.kind) {
        case ShapeKind::Disk: {
            Pt<S> d = p - h.center;
            if constexpr (scalar_traits<S>::exact) {
                return d.x * d.x + d.y * d.y < h.r2;
            } else {
                return std::sqrt(d.x * d.x + d.y * d.y) < std::sqrt(h.r2) - scalar_traits<S>::tol();
            }
        }
        case ShapeKind::TriDown:
            return pred_lt(p.u(), h.a) && pred_lt(p.v(), h.b) && pred_lt(p.w(), h.c);
        case ShapeKind::TriUp:
            return pred_lt(S(0) - p.u(), h.a) && pred_lt(S(0) - p.v(), h.b) &&
                   pred_lt(S(0) - p.w(), h.c);
        case ShapeKind::Square:
            return pred_lt(h.x0, p.x) && pred_lt(p.x, h.x0 + h.side) &&
                   pred_lt(h.y0, p.y) && pred_lt(p.y, h.y0 + h.side);
    }
    return false;
}

template <class S>
bool contains(const Homothet<S>& h, const Pt<S>& p, bool open) {
    return open ? contains_open(h, p) : contains_closed(h, p);
}

template <class S>
bool on_boundary(const Homothet<S>& h, const Pt<S>& p) {
    return contains_closed(h, p) && !contains_open(h, p);
}

namespace detail {

// |c1-c2| <=/< r1+r2 without square roots in exact mode.
template <class S, bool Strict>
bool disks_meet(const Homothet<S>& d1, const Homothet<S>& d2) {
    Pt<S> d = d2.center - d1.center;
    S dist2 = d.x * d.x + d.y * d.y;
    if constexpr (scalar_traits<S>::exact) {
        // dist2 <= r1^2 + r2^2 + 2 r1 r2  <=>  (dist2 - r1^2 - r2^2) <= 2 sqrt(r1^2 r2^2)
        S lhs = dist2 - d1.r2 - d2.r2;
        if (lhs.sign() <= 0) return true;
        S diff = lhs * lhs - S(4) * d1.r2 * d2.r2;
        return Strict ? diff.sign() < 0 : diff.sign() <= 0;
    } else {
        double dist = std::sqrt(dist2);
        double rsum = std::sqrt(d1.r2) + std::sqrt(d2.r2);
        return Strict ? dist < rsum - scalar_traits<S>::tol()
                      : dist <= rsum + scalar_traits<S>::tol();
    }
}

template <class S, bool Strict>
bool cmp(const S& x, const S& y) {  // x <= y (closed) or x < y (interior)
    return Strict ? pred_lt(x, y) : pred_leq(x, y);
}

}  // namespace detail

template <class S, bool Strict>
bool homothets_meet(const Homothet<S>& h1, const Homothet<S>& h2) {
    using std::min;
    if (!same_family(h1.kind, h2.kind))
        throw std::invalid_argument("intersects: mixed shape families");
    if (h1.kind == ShapeKind::Disk) return detail::disks_meet<S, Strict>(h1, h2);
    if (h1.kind == ShapeKind::Square) {
        return detail::cmp<S, Strict>(h1.x0, h2.x0 + h2.side) &&
               detail::cmp<S, Strict>(h2.x0, h1.x0 + h1.side) &&
               detail::cmp<S, Strict>(h1.y0, h2.y0 + h2.side) &&
               detail::cmp<S, Strict>(h2.y0, h1.y0 + h1.side);
    }
    // triangles
    if (h1.kind == h2.kind) {
        S s = min(h1.a, h2.a) + min(h1.b, h2.b) + min(h1.c, h2.c);
        return detail::cmp<S, Strict>(S(0), s);
    }
    const Homothet<S>& dn = (h1.kind == ShapeKind::TriDown) ? h1 : h2;
    const Homothet<S>& up = (h1.kind == ShapeKind::TriDown) ? h2 : h1;
    // feasibility of {-A' <= u <= A, -B' <= v <= B, -C' <= w <= C, u+v+w=0}
    return detail::cmp<S, Strict>(S(0) - up.a, dn.a) &&
           detail::cmp<S, Strict>(S(0) - up.b, dn.b) &&
           detail::cmp<S, Strict>(S(0) - up.c, dn.c) &&
           detail::cmp<S, Strict>(S(0), dn.a + dn.b + dn.c) &&
           detail::cmp<S, Strict>(S(0), up.a + up.b + up.c);
}

template <class S>
bool intersects(const Homothet<S>& h1, const Homothet<S>& h2) {
    return homothets_meet<S, false>(h1, h2);
}

template <class S>
bool interiors_intersect(const Homothet<S>& h1, const Homothet<S>& h2) {
    return homothets_meet<S, true>(h1, h2);
}

// inner subseteq outer (closed), for the container kinds the recursion uses.
template <class S>
bool contains_homothet(const Homothet<S>& outer, const Homothet<S>& inner) {
    if (outer.kind == ShapeKind::Square && inner.kind == ShapeKind::Square) {
        return pred_leq(outer.x0, inner.x0) && pred_leq(inner.x0 + inner.side, outer.x0 + outer.side) &&
               pred_leq(outer.y0, inner.y0) && pred_leq(inner.y0 + inner.side, outer.y0 + outer.side);
    }
    if (is_triangle(outer.kind) && is_triangle(inner.kind)) {
        if (outer.kind == inner.kind) {
            return pred_leq(inner.a, outer.a) && pred_leq(inner.b, outer.b) &&
                   pred_leq(inner.c, outer.c);
        }
        // opposite orientations: inner's far sides must respect outer's bounds
        return pred_leq(inner.b + inner.c, outer.a) && pred_leq(inner.a + inner.c, outer.b) &&
               pred_leq(inner.a + inner.b, outer.c);
    }
    throw std::invalid_argument("contains_homothet: unsupported kind pair");
}

// Does the linear part of g map downward triangles to downward triangles?
// Only rotations by multiples of 60 degrees and reflections across the
// triangle axis directions are ever applied to triangles.
template <class S>
bool maps_down_to_down(const Isometry<S>& g) {
    using std::abs;
    // image of the down-apex direction (0,-1)
    S ax = S(0) - g.m01, ay = S(0) - g.m11;
    // down-class apex directions: (0,-1), (+-sqrt3/2, 1/2)
    S tol = scalar_traits<S>::tol();
    auto near = [&](const S& p, const S& q) { S d = p - q; return (d < S(0) ? S(0) - d : d) <= tol + tol; };
    S h = scalar_traits<S>::half(S(1));
    S s32 = scalar_traits<S>::half(scalar_traits<S>::sqrt3());
    if (near(ax, S(0)) && near(ay, S(-1))) return true;
    if (near(abs(ax), s32) && near(ay, h)) return true;
    return false;
}

template <class S>
Homothet<S> apply_isometry(const Isometry<S>& g, const Homothet<S>& h) {
    switch (h.kind) {
        case ShapeKind::Disk: {
            auto out = h;
            out.center = g.apply(h.center);
            return out;
        }
        case ShapeKind::Square: {
            using std::min;
            Pt<S> p1 = g.apply(Pt<S>{h.x0, h.y0});
            Pt<S> p2 = g.apply(Pt<S>{h.x0 + h.side, h.y0 + h.side});
            return Homothet<S>::square(min(p1.x, p2.x), min(p1.y, p2.y), h.side);
        }
        case ShapeKind::TriDown:
        case ShapeKind::TriUp: {
            bool down_in = (h.kind == ShapeKind::TriDown);
            bool down_out = maps_down_to_down(g) ? down_in : !down_in;
            auto vs = tri_vertices(h);
            for (auto& v : vs) v = g.apply(v);
            using std::max;
            if (down_out) {
                S A = max(max(vs[0].u(), vs[1].u()), vs[2].u());
                S B = max(max(vs[0].v(), vs[1].v()), vs[2].v());
                S C = max(max(vs[0].w(), vs[1].w()), vs[2].w());
                return Homothet<S>::tri_down(A, B, C);
            }
            S A = max(max(S(0) - vs[0].u(), S(0) - vs[1].u()), S(0) - vs[2].u());
            S B = max(max(S(0) - vs[0].v(), S(0) - vs[1].v()), S(0) - vs[2].v());
            S C = max(max(S(0) - vs[0].w(), S(0) - vs[1].w()), S(0) - vs[2].w());
            return Homothet<S>::tri_up(A, B, C);
        }
    }
    throw std::invalid_argument("apply_isometry: bad kind");
}

}  // namespace strongmatch
