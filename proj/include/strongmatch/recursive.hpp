#pragma once

// Recursive strong-matching engines for theta-six (triangle containers) and
// L-infinity Delaunay (square containers); both guarantee ceil((n-1)/4)
// matched pairs.
//
// Node structure:
//   n <= 1          nothing
//   2 <= n <= 5     anchored shrink to exactly two points, match them
//   n % 4 != 2      anchored shrink excluding the farthest point, recurse
//   n = 4m+2        split into four equal quadrants and recurse; if the
//                   results exceed m pairs, done; otherwise run the residue
//                   case analysis, which rebuilds four disjoint regions from
//                   corner-anchored shrinks and grows (plus the derived
//                   region S' in the triangle case) and recurses into those.
//
// The square case analysis is written role-relatively over the four corner
// quadrants.  The triangle analysis runs on a logical relabeling of the
// three cone functionals: every symmetry of an equilateral container
// permutes (u,v,w), so normalization is an index permutation, exact in both
// numeric modes.  Downward containers are first flipped by a half turn.
//
// Every constructed family is checked at runtime: regions pairwise
// interior-disjoint, member sets disjoint, members inside their region,
// regions inside the container, grown regions free of foreign points.  A
// violation throws instead of silently degrading.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>

#include "strongmatch/matching.hpp"
#include "strongmatch/verify.hpp"

namespace strongmatch {

struct RecursionStats {
    std::map<std::string, long> branches;
    int max_depth = 0;
    void hit(const std::string& name) { ++branches[name]; }
    void depth(int d) { max_depth = std::max(max_depth, d); }
};

inline void sm_require(bool cond, const char* what) {
    if (!cond) throw std::runtime_error(std::string("recursion soundness: ") + what);
}

enum class AnchorMode { ShrinkExclude, GrowInclude };

template <class S>
struct AnchoredShape {
    Homothet<S> shape;
    std::vector<int> members;
};

namespace rec_detail {

// ---------- anchored-scale primitives ----------

// Square corner ids: 0=TL 1=TR 2=BL 3=BR.
template <class S>
Pt<S> square_corner(const Homothet<S>& sq, int cid) {
    S x = (cid == 0 || cid == 2) ? sq.x0 : sq.x0 + sq.side;
    S y = (cid == 2 || cid == 3) ? sq.y0 : sq.y0 + sq.side;
    return {x, y};
}

template <class S>
struct SquareAnchor {
    Pt<S> a;
    int cid;

    std::optional<S> scale_of(const Pt<S>& p) const {
        using std::max;
        S dx = (cid == 0 || cid == 2) ? p.x - a.x : a.x - p.x;
        S dy = (cid == 2 || cid == 3) ? p.y - a.y : a.y - p.y;
        const S eps = scalar_traits<S>::tol();
        if (dx < S(0) - eps || dy < S(0) - eps) return std::nullopt;
        return max(max(dx, dy), S(0));
    }

    Homothet<S> shape_at(const S& tau) const {
        S x0 = (cid == 0 || cid == 2) ? a.x : a.x - tau;
        S y0 = (cid == 2 || cid == 3) ? a.y : a.y - tau;
        return Homothet<S>::square(x0, y0, tau);
    }
};

// Logical axes for triangles: 0 = top role, 1 = bottom-left role,
// 2 = bottom-right role.  perm[k] is the physical functional (0=u,1=v,2=w)
// serving logical axis k.
using Perm = std::array<int, 3>;

template <class S>
S functional(const Pt<S>& p, int axis) {
    switch (axis) {
        case 0: return p.u();
        case 1: return p.v();
        default: return p.w();
    }
}

// Up-triangle anchored at the corner of logical axis k, pinned to the
// container's other two sides.  tau equals the resulting scale.
template <class S>
struct UpAnchor {
    Perm perm;
    std::array<S, 3> la;  // logical container bounds (on the negated functionals)
    int k;

    std::optional<S> scale_of(const Pt<S>& p) const {
        using std::max;
        const S eps = scalar_traits<S>::tol();
        int k2 = (k + 1) % 3, k3 = (k + 2) % 3;
        if (S(0) - functional<S>(p, perm[k2]) > la[k2] + eps) return std::nullopt;
        if (S(0) - functional<S>(p, perm[k3]) > la[k3] + eps) return std::nullopt;
        return max(la[k2] + la[k3] - functional<S>(p, perm[k]), S(0));
    }

    Homothet<S> shape_at(const S& tau) const {
        int k2 = (k + 1) % 3, k3 = (k + 2) % 3;
        std::array<S, 3> ph{};
        ph[perm[k]] = tau - la[k2] - la[k3];
        ph[perm[k2]] = la[k2];
        ph[perm[k3]] = la[k3];
        return Homothet<S>::tri_up(ph[0], ph[1], ph[2]);
    }
};

// Down-triangle anchored at a corner of the central quadrant, growing the
// bound of logical axis `grow`.
template <class S>
struct DownAnchor {
    Perm perm;
    std::array<S, 3> l3;  // logical bounds of the central down-triangle
    int grow;

    std::optional<S> scale_of(const Pt<S>& p) const {
        using std::max;
        const S eps = scalar_traits<S>::tol();
        int k2 = (grow + 1) % 3, k3 = (grow + 2) % 3;
        if (functional<S>(p, perm[k2]) > l3[k2] + eps) return std::nullopt;
        if (functional<S>(p, perm[k3]) > l3[k3] + eps) return std::nullopt;
        return max(l3[k2] + l3[k3] + functional<S>(p, perm[grow]), S(0));
    }

    Homothet<S> shape_at(const S& tau) const {
        int k2 = (grow + 1) % 3, k3 = (grow + 2) % 3;
        std::array<S, 3> ph{};
        ph[perm[grow]] = tau - l3[k2] - l3[k3];
        ph[perm[k2]] = l3[k2];
        ph[perm[k3]] = l3[k3];
        return Homothet<S>::tri_down(ph[0], ph[1], ph[2]);
    }
};

template <class S, class Anchor>
std::vector<std::pair<S, int>> anchor_order(const Anchor& an, const std::vector<Pt<S>>& pts,
                                            const std::vector<int>& idxs) {
    std::vector<std::pair<S, int>> order;
    order.reserve(idxs.size());
    for (int i : idxs)
        if (auto sc = an.scale_of(pts[i])) order.emplace_back(*sc, i);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    return order;
}

template <class S, class Anchor>
AnchoredShape<S> shape_for_count(const Anchor& an, const std::vector<std::pair<S, int>>& order,
                                 std::size_t k, const S& floor_scale) {
    using std::max;
    sm_require(k <= order.size(), "anchored shape: not enough points in the growth wedge");
    AnchoredShape<S> out;
    S tau = (k == 0) ? floor_scale : max(order[k - 1].first, floor_scale);
    out.shape = an.shape_at(tau);
    out.members.reserve(k);
    for (std::size_t t = 0; t < k; ++t) out.members.push_back(order[t].second);
    std::sort(out.members.begin(), out.members.end());
    return out;
}

}  // namespace rec_detail

// Public anchored-homothet construction.  Shrink ranks the points inside the
// container and keeps all but x; grow ranks the whole input, floors the
// scale at the container's own extent and keeps inside+x.  Triangle corner
// ids: TriUp 0=top 1=bottom-left 2=bottom-right; TriDown 0=top-left
// 1=top-right 2=bottom.
template <class S>
AnchoredShape<S> anchored_homothet(const std::vector<Pt<S>>& pts, const Homothet<S>& container,
                                   int corner, AnchorMode mode, int x) {
    using namespace rec_detail;
    std::vector<int> inside, all;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        all.push_back(i);
        if (contains_closed(container, pts[i])) inside.push_back(i);
    }
    const int n_in = static_cast<int>(inside.size());
    auto finish = [&](auto anchor) -> AnchoredShape<S> {
        if (mode == AnchorMode::ShrinkExclude) {
            auto order = anchor_order<S>(anchor, pts, inside);
            sm_require(order.size() == inside.size(), "anchored shrink: point outside anchor wedge");
            return shape_for_count<S>(anchor, order, static_cast<std::size_t>(std::max(0, n_in - x)),
                                      S(0));
        }
        auto order = anchor_order<S>(anchor, pts, all);
        return shape_for_count<S>(anchor, order, static_cast<std::size_t>(n_in + x),
                                  container.scale());
    };
    switch (container.kind) {
        case ShapeKind::Square:
            return finish(SquareAnchor<S>{square_corner(container, corner), corner});
        case ShapeKind::TriUp:
            return finish(UpAnchor<S>{{0, 1, 2}, {container.a, container.b, container.c}, corner});
        case ShapeKind::TriDown: {
            int grow_axis = corner == 0 ? 2 : corner == 1 ? 1 : 0;
            return finish(
                DownAnchor<S>{{0, 1, 2}, {container.a, container.b, container.c}, grow_axis});
        }
        default: throw std::invalid_argument("anchored_homothet: unsupported container");
    }
}

namespace rec_detail {

// ---------- shared solver scaffolding ----------

template <class S>
struct Node {
    const std::vector<Pt<S>>* pts;  // all points, current frame
    RecursionStats* stats;
    int depth;

    void hit(const std::string& name) const {
        if (stats) stats->hit(name);
    }
    Node deeper() const {
        if (stats) stats->depth(depth + 1);
        return {pts, stats, depth + 1};
    }
};

inline int ceil_bound(std::size_t n) {
    return n <= 1 ? 0 : ceil_div(static_cast<int>(n) - 1, 4);
}

template <class S>
struct PlannedRegion {
    Homothet<S> shape;
    std::vector<int> members;
    std::optional<std::vector<MatchedPair<S>>> precomputed;  // reused quadrant result
};

template <class S>
void check_family(const Node<S>& node, const Homothet<S>& container,
                  const std::vector<PlannedRegion<S>>& regions) {
    const auto& pts = *node.pts;
    for (std::size_t a = 0; a < regions.size(); ++a) {
        sm_require(contains_homothet(container, regions[a].shape), "region escapes container");
        for (int i : regions[a].members)
            sm_require(contains_closed(regions[a].shape, pts[i]), "member outside its region");
        for (std::size_t b = a + 1; b < regions.size(); ++b) {
            sm_require(!interiors_intersect(regions[a].shape, regions[b].shape), "regions overlap");
            for (int i : regions[a].members)
                for (int j : regions[b].members) sm_require(i != j, "point claimed by two regions");
        }
    }
}

// Assert a grown region captured nothing outside this node's member set.
template <class S>
void check_grow(const Node<S>& node, const std::vector<int>& node_members,
                const AnchoredShape<S>& grown) {
    const auto& pts = *node.pts;
    std::vector<char> is_member(pts.size(), 0);
    for (int i : node_members) is_member[i] = 1;
    for (int t = 0; t < static_cast<int>(pts.size()); ++t)
        sm_require(is_member[t] || !contains_open(grown.shape, pts[t]),
                   "grown region captures a foreign point");
    for (int i : grown.members)
        sm_require(is_member[i], "grown region ranked a foreign point");
}

inline std::vector<int> set_difference_sorted(const std::vector<int>& all,
                                               const std::vector<int>& sub) {
    std::vector<int> a = all, b = sub, out;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// ---------- square engine ----------

template <class S>
std::vector<MatchedPair<S>> solve_square(const Node<S>& node, const Homothet<S>& container,
                                         const std::vector<int>& members);

template <class S>
AnchoredShape<S> square_shrink(const Node<S>& node, const Homothet<S>& quadrant, int cid,
                               const std::vector<int>& quad_members, int exclude) {
    SquareAnchor<S> an{square_corner(quadrant, cid), cid};
    auto order = anchor_order<S>(an, *node.pts, quad_members);
    sm_require(order.size() == quad_members.size(), "square shrink: member outside wedge");
    std::size_t k = static_cast<std::size_t>(
        std::max(0, static_cast<int>(quad_members.size()) - exclude));
    return shape_for_count<S>(an, order, k, S(0));
}

template <class S>
AnchoredShape<S> square_grow(const Node<S>& node, const Homothet<S>& quadrant, int cid,
                             const std::vector<int>& node_members, std::size_t quad_count, int x) {
    SquareAnchor<S> an{square_corner(quadrant, cid), cid};
    auto order = anchor_order<S>(an, *node.pts, node_members);
    auto out = shape_for_count<S>(an, order, quad_count + static_cast<std::size_t>(x),
                                  quadrant.side);
    check_grow(node, node_members, out);
    return out;
}

template <class S>
std::vector<MatchedPair<S>> base_case_square(const Node<S>& node, const Homothet<S>& container,
                                             const std::vector<int>& members) {
    node.hit("sq.base");
    const auto& pts = *node.pts;
    auto shrunk = square_shrink(node, container, 0, members,
                                static_cast<int>(members.size()) - 2);
    sm_require(shrunk.members.size() == 2, "base case: shrink did not isolate a pair");
    int i = shrunk.members[0], j = shrunk.members[1];

    auto fam = square_family(pts[i], pts[j]);
    using std::max;
    using std::min;
    const auto& R = shrunk.shape;
    S reg_lo = fam.x_dominant ? R.y0 : R.x0;
    S lo = max(fam.free_lo, reg_lo);
    S hi = min(fam.free_hi, reg_lo + R.side - fam.side);
    sm_require(pred_leq(lo, hi), "base case: no square placement inside region");
    auto rep = square_at_offset(fam, scalar_traits<S>::half(lo + hi));

    for (int t = 0; t < static_cast<int>(pts.size()); ++t)
        sm_require(t == i || t == j || !contains_open(rep, pts[t]),
                   "base case: representative captures a third point");
    return {{i, j, rep}};
}

template <class S>
std::vector<MatchedPair<S>> run_family(const Node<S>& node, const Homothet<S>& container,
                                       std::vector<PlannedRegion<S>> regions, int need,
                                       std::vector<MatchedPair<S>> (*solver)(
                                           const Node<S>&, const Homothet<S>&,
                                           const std::vector<int>&)) {
    check_family(node, container, regions);
    std::vector<MatchedPair<S>> out;
    for (auto& r : regions) {
        auto part = r.precomputed ? std::move(*r.precomputed)
                                  : solver(node.deeper(), r.shape, r.members);
        out.insert(out.end(), part.begin(), part.end());
    }
    sm_require(static_cast<int>(out.size()) >= need, "case family missed its bound");
    return out;
}

template <class S>
std::vector<MatchedPair<S>> solve_square(const Node<S>& node, const Homothet<S>& container,
                                         const std::vector<int>& members) {
    sm_require(node.depth < 500, "depth fuse");
    const std::size_t n = members.size();
    if (n <= 1) return {};
    const auto& pts = *node.pts;
    if (n <= 5) return base_case_square(node, container, members);

    if (n % 4 != 2) {
        node.hit("sq.drop1");
        auto sub = square_shrink(node, container, 0, members, 1);
        auto res = solve_square(node.deeper(), sub.shape, sub.members);
        sm_require(static_cast<int>(res.size()) >= ceil_bound(n), "drop-one missed the bound");
        return res;
    }

    // ----- quadrant split; half-open: on a vertical line go left, on a
    // horizontal line go down -----
    node.hit("sq.quad");
    const S h = scalar_traits<S>::half(container.side);
    const S mx = container.x0 + h, my = container.y0 + h;
    std::array<Homothet<S>, 4> quad = {
        Homothet<S>::square(container.x0, my, h),            // 0 TL
        Homothet<S>::square(mx, my, h),                      // 1 TR
        Homothet<S>::square(container.x0, container.y0, h),  // 2 BL
        Homothet<S>::square(mx, container.y0, h),            // 3 BR
    };
    std::array<std::vector<int>, 4> qm;
    for (int i : members) {
        bool left = !(pts[i].x > mx);
        bool bottom = !(pts[i].y > my);
        qm[left ? (bottom ? 2 : 0) : (bottom ? 3 : 1)].push_back(i);
    }

    const int m = (static_cast<int>(n) - 2) / 4;
    std::array<std::vector<MatchedPair<S>>, 4> sub;
    int A = 0;
    for (int q = 0; q < 4; ++q) {
        sub[q] = solve_square(node.deeper(), quad[q], qm[q]);
        A += static_cast<int>(sub[q].size());
    }
    sm_require(A >= m, "claim 1 violated");
    if (A >= m + 1) {
        node.hit("sq.quad_surplus");
        std::vector<MatchedPair<S>> out;
        for (auto& p : sub) out.insert(out.end(), p.begin(), p.end());
        return out;
    }

    // ----- residue case analysis (A == m) -----
    std::array<int, 4> nr{}, rr{};
    for (int q = 0; q < 4; ++q) {
        nr[q] = static_cast<int>(qm[q].size());
        rr[q] = nr[q] % 4;
    }
    auto hmate = [](int q) { return q ^ 1; };
    auto vmate = [](int q) { return q ^ 2; };
    auto dmate = [](int q) { return q ^ 3; };

    // inner-side tests of a corner-anchored square of side s at quadrant q's
    // outer corner (toward the rest of the container)
    auto beyond_v = [&](int q, const S& s, const Pt<S>& p) {
        Pt<S> a = square_corner(container, q);
        return (q == 0 || q == 2) ? p.x > a.x + s : p.x < a.x - s;
    };
    auto beyond_h = [&](int q, const S& s, const Pt<S>& p) {
        Pt<S> a = square_corner(container, q);
        return (q == 0 || q == 1) ? p.y < a.y - s : p.y > a.y + s;
    };

    int threes = 0, ones = 0, zeros = 0;
    for (int q = 0; q < 4; ++q) {
        threes += rr[q] == 3;
        ones += rr[q] == 1;
        zeros += rr[q] == 0;
    }

    std::array<int, 4> shrink_x{};
    if (threes == 1 && ones == 3) {
        int sp = 0;
        for (int q = 0; q < 4; ++q)
            if (rr[q] == 3) sp = q;
        for (int q = 0; q < 4; ++q) shrink_x[q] = (q == sp) ? 1 : 3;
        std::array<AnchoredShape<S>, 4> E;
        for (int q = 0; q < 4; ++q) E[q] = square_shrink(node, quad[q], q, qm[q], shrink_x[q]);
        int L = 0;
        for (int q = 1; q < 4; ++q)
            if (E[q].shape.side > E[L].shape.side) L = q;
        auto excluded = [&](int q) { return set_difference_sorted(qm[q], E[q].members); };
        auto shr = [&](int q) { return PlannedRegion<S>{E[q].shape, E[q].members, std::nullopt}; };
        auto grw = [&](int q, int x) {
            auto g = square_grow(node, quad[q], q, members, qm[q].size(), x);
            return PlannedRegion<S>{g.shape, g.members, std::nullopt};
        };

        if (L == sp) {
            auto ex = excluded(sp);
            sm_require(ex.size() == 1, "case 1: special quadrant should exclude one point");
            if (beyond_v(sp, E[sp].shape.side, pts[ex[0]])) {
                node.hit("sq.c1.special.sideways");
                return run_family<S>(node, container,
                                     {shr(sp), grw(hmate(sp), 1), shr(vmate(sp)), shr(dmate(sp))},
                                     m + 1, &solve_square<S>);
            }
            node.hit("sq.c1.special.downward");
            return run_family<S>(node, container,
                                 {shr(sp), shr(hmate(sp)), grw(vmate(sp), 1), shr(dmate(sp))},
                                 m + 1, &solve_square<S>);
        }
        if (L == hmate(sp) || L == vmate(sp)) {
            bool horiz = (L == hmate(sp));
            auto ex = excluded(L);
            bool away = false;
            for (int i : ex)
                away |= horiz ? beyond_h(L, E[L].shape.side, pts[i])
                              : beyond_v(L, E[L].shape.side, pts[i]);
            int other = horiz ? vmate(sp) : hmate(sp);
            if (away) {
                node.hit("sq.c1.adjacent.away");
                return run_family<S>(node, container,
                                     {shr(sp), shr(L), shr(other), grw(dmate(sp), 1)}, m + 1,
                                     &solve_square<S>);
            }
            node.hit("sq.c1.adjacent.back");
            return run_family<S>(node, container, {grw(sp, 3), shr(L), shr(other), shr(dmate(sp))},
                                 m + 1, &solve_square<S>);
        }
        // L diagonal to sp
        auto ex = excluded(L);
        bool above = false;
        for (int i : ex) above |= beyond_h(L, E[L].shape.side, pts[i]);
        if (above) {
            node.hit("sq.c1.diagonal.h");
            return run_family<S>(node, container,
                                 {shr(sp), grw(vmate(L), 1), shr(hmate(L)), shr(L)}, m + 1,
                                 &solve_square<S>);
        }
        node.hit("sq.c1.diagonal.v");
        return run_family<S>(node, container, {shr(sp), shr(vmate(L)), grw(hmate(L), 1), shr(L)},
                             m + 1, &solve_square<S>);
    }

    sm_require(zeros == 2 && ones == 2, "claim 2 violated");
    for (int q = 0; q < 4; ++q) shrink_x[q] = (rr[q] == 1) ? 3 : 2;
    std::array<AnchoredShape<S>, 4> E;
    for (int q = 0; q < 4; ++q) E[q] = square_shrink(node, quad[q], q, qm[q], shrink_x[q]);
    int L = 0;
    for (int q = 1; q < 4; ++q)
        if (E[q].shape.side > E[L].shape.side) L = q;
    auto excluded = [&](int q) { return set_difference_sorted(qm[q], E[q].members); };
    auto shr = [&](int q) { return PlannedRegion<S>{E[q].shape, E[q].members, std::nullopt}; };
    auto grw = [&](int q, int x) {
        auto g = square_grow(node, quad[q], q, members, qm[q].size(), x);
        return PlannedRegion<S>{g.shape, g.members, std::nullopt};
    };
    int one_a = -1, one_b = -1;
    for (int q = 0; q < 4; ++q)
        if (rr[q] == 1) (one_a < 0 ? one_a : one_b) = q;
    bool adjacent = (one_b == hmate(one_a)) || (one_b == vmate(one_a));

    if (adjacent) {
        if (rr[L] == 1) {
            int a = L, b = (one_a == L) ? one_b : one_a;
            bool bh = (b == hmate(a));
            auto ex = excluded(a);
            bool toward = false;
            for (int i : ex)
                toward |= bh ? beyond_v(a, E[a].shape.side, pts[i])
                             : beyond_h(a, E[a].shape.side, pts[i]);
            int zero_adj = bh ? vmate(a) : hmate(a);
            int zero_far = dmate(a);
            if (toward) {
                node.hit("sq.c2.adj.one_largest.toward");
                return run_family<S>(node, container,
                                     {shr(a), grw(b, 1), shr(zero_adj), shr(zero_far)}, m + 1,
                                     &solve_square<S>);
            }
            node.hit("sq.c2.adj.one_largest.back");
            return run_family<S>(node, container, {shr(a), shr(b), grw(zero_adj, 2), shr(zero_far)},
                                 m + 1, &solve_square<S>);
        }
        int c = L;
        bool oneh = rr[hmate(c)] == 1;  // is c's horizontal mate the adjacent 1-role?
        int a_c = oneh ? hmate(c) : vmate(c);
        int other_one = (one_a == a_c) ? one_b : one_a;
        int d = dmate(a_c);
        auto ex = excluded(c);
        bool toward = false;
        for (int i : ex)
            toward |= oneh ? beyond_v(c, E[c].shape.side, pts[i])
                           : beyond_h(c, E[c].shape.side, pts[i]);
        if (toward) {
            node.hit("sq.c2.adj.zero_largest.toward");
            return run_family<S>(node, container, {grw(a_c, 1), shr(other_one), shr(c), shr(d)},
                                 m + 1, &solve_square<S>);
        }
        node.hit("sq.c2.adj.zero_largest.along");
        return run_family<S>(node, container, {shr(a_c), shr(other_one), shr(c), grw(d, 2)}, m + 1,
                             &solve_square<S>);
    }

    // diagonal pattern
    if (rr[L] == 1) {
        auto ex = excluded(L);
        int nv = 0, nh = 0;
        for (int i : ex) {
            nv += beyond_v(L, E[L].shape.side, pts[i]);
            nh += beyond_h(L, E[L].shape.side, pts[i]);
        }
        if (nv >= 2) {
            node.hit("sq.c2.diag.one_largest.sideways");
            return run_family<S>(node, container,
                                 {shr(L), grw(hmate(L), 2), shr(vmate(L)), shr(dmate(L))}, m + 1,
                                 &solve_square<S>);
        }
        sm_require(nh >= 2, "case 2 diagonal: excluded points vanished");
        node.hit("sq.c2.diag.one_largest.downward");
        return run_family<S>(node, container,
                             {shr(L), shr(hmate(L)), grw(vmate(L), 2), shr(dmate(L))}, m + 1,
                             &solve_square<S>);
    }
    auto ex = excluded(L);
    bool toward_h = false;
    for (int i : ex) toward_h |= beyond_v(L, E[L].shape.side, pts[i]);
    if (toward_h) {
        node.hit("sq.c2.diag.zero_largest.h");
        return run_family<S>(node, container, {grw(hmate(L), 1), shr(L), shr(vmate(L)), shr(dmate(L))},
                             m + 1, &solve_square<S>);
    }
    node.hit("sq.c2.diag.zero_largest.v");
    return run_family<S>(node, container, {shr(hmate(L)), shr(L), grw(vmate(L), 1), shr(dmate(L))},
                         m + 1, &solve_square<S>);
}

// ---------- theta engine ----------

template <class S>
std::vector<MatchedPair<S>> solve_theta(const Node<S>& node, const Homothet<S>& container,
                                        const std::vector<int>& members);

template <class S>
std::vector<MatchedPair<S>> base_case_theta(const Node<S>& node, const Homothet<S>& cont,
                                            const std::vector<int>& members) {
    node.hit("th.base");
    const auto& pts = *node.pts;
    UpAnchor<S> top{{0, 1, 2}, {cont.a, cont.b, cont.c}, 0};
    auto order = anchor_order<S>(top, pts, members);
    sm_require(order.size() == members.size(), "theta base: member outside container wedge");
    auto shrunk = shape_for_count<S>(top, order, 2, S(0));
    sm_require(shrunk.members.size() == 2, "theta base: shrink did not isolate a pair");
    int i = shrunk.members[0], j = shrunk.members[1];
    auto rep = smallest_tri_up(pts[i], pts[j]);
    sm_require(contains_homothet(shrunk.shape, rep), "theta base: pair triangle escapes region");
    for (int t = 0; t < static_cast<int>(pts.size()); ++t)
        sm_require(t == i || t == j || !contains_open(rep, pts[t]),
                   "theta base: representative captures a third point");
    return {{i, j, rep}};
}

template <class S>
std::vector<MatchedPair<S>> solve_theta_up(const Node<S>& node, const Homothet<S>& cont,
                                           const std::vector<int>& members) {
    sm_require(node.depth < 500, "depth fuse");
    const std::size_t n = members.size();
    if (n <= 1) return {};
    const auto& pts = *node.pts;
    if (n <= 5) return base_case_theta(node, cont, members);

    const std::array<S, 3> phys{cont.a, cont.b, cont.c};
    const S sigma = cont.scale();
    const S half = scalar_traits<S>::half(sigma);

    if (n % 4 != 2) {
        node.hit("th.drop1");
        UpAnchor<S> top{{0, 1, 2}, phys, 0};
        auto order = anchor_order<S>(top, pts, members);
        sm_require(order.size() == members.size(), "theta drop: member outside wedge");
        auto sub = shape_for_count<S>(top, order, n - 1, S(0));
        auto res = solve_theta_up(node.deeper(), sub.shape, sub.members);
        sm_require(static_cast<int>(res.size()) >= ceil_bound(n), "drop-one missed the bound");
        return res;
    }

    // ----- quadrant split; half-open, resolved in axis order u, v, w -----
    node.hit("th.quad");
    std::array<Homothet<S>, 3> qshape = {
        Homothet<S>::tri_up(cont.a - half, cont.b, cont.c),  // axis 0: top
        Homothet<S>::tri_up(cont.a, cont.b - half, cont.c),  // axis 1: bottom-left
        Homothet<S>::tri_up(cont.a, cont.b, cont.c - half),  // axis 2: bottom-right
    };
    Homothet<S> cshape = Homothet<S>::tri_down(half - cont.a, half - cont.b, half - cont.c);
    std::array<std::vector<int>, 3> qm;
    std::vector<int> cm;
    for (int i : members) {
        if (pts[i].u() > half - cont.a) qm[0].push_back(i);
        else if (pts[i].v() > half - cont.b) qm[1].push_back(i);
        else if (pts[i].w() > half - cont.c) qm[2].push_back(i);
        else cm.push_back(i);
    }

    const int m = (static_cast<int>(n) - 2) / 4;
    std::array<std::vector<MatchedPair<S>>, 3> sub;
    int A = 0;
    for (int k = 0; k < 3; ++k) {
        sub[k] = solve_theta_up(node.deeper(), qshape[k], qm[k]);
        A += static_cast<int>(sub[k].size());
    }
    auto subc = solve_theta(node.deeper(), cshape, cm);
    A += static_cast<int>(subc.size());
    sm_require(A >= m, "claim 1 violated");
    if (A >= m + 1) {
        node.hit("th.quad_surplus");
        std::vector<MatchedPair<S>> out = subc;
        for (auto& p : sub) out.insert(out.end(), p.begin(), p.end());
        return out;
    }

    // ----- residue case analysis (A == m) -----
    std::array<int, 3> cn{}, cr{};
    for (int k = 0; k < 3; ++k) {
        cn[k] = static_cast<int>(qm[k].size());
        cr[k] = cn[k] % 4;
    }
    const int nc = static_cast<int>(cm.size());
    const int rc = nc % 4;

    enum class Case { C1Center, C1Corner, C2R3Zero, C2R3One };
    Case cs;
    int special = -1;  // physical axis of the distinguished corner
    if (rc == 3) {
        sm_require(cr[0] == 1 && cr[1] == 1 && cr[2] == 1, "claim 2 violated (center 3)");
        cs = Case::C1Center;
    } else if (rc == 1 && (cr[0] == 3 || cr[1] == 3 || cr[2] == 3)) {
        for (int k = 0; k < 3; ++k)
            if (cr[k] == 3) special = k;
        sm_require(cr[(special + 1) % 3] == 1 && cr[(special + 2) % 3] == 1,
                   "claim 2 violated (corner 3)");
        cs = Case::C1Corner;
    } else if (rc == 0) {
        special = -1;
        for (int k = 0; k < 3; ++k)
            if (cr[k] == 0) special = k;
        sm_require(special >= 0 && cr[(special + 1) % 3] == 1 && cr[(special + 2) % 3] == 1,
                   "claim 2 violated (center 0)");
        cs = Case::C2R3Zero;
    } else {
        sm_require(rc == 1, "claim 2 violated (pattern)");
        special = -1;
        for (int k = 0; k < 3; ++k)
            if (cr[k] == 1) special = k;
        sm_require(special >= 0 && cr[(special + 1) % 3] == 0 && cr[(special + 2) % 3] == 0,
                   "claim 2 violated (center 1)");
        cs = Case::C2R3One;
    }

    // per-case parameters
    int t_l2 = 1, t_l1 = 1, sprime_extra = 1;
    switch (cs) {
        case Case::C1Center: t_l2 = 1; t_l1 = 1; sprime_extra = 3; break;
        case Case::C1Corner: sprime_extra = 1; break;          // thresholds depend on sub-case
        case Case::C2R3Zero: sprime_extra = 2; break;
        case Case::C2R3One: sprime_extra = 1; break;
    }

    // tiny sub-cases: the three corners hold at most one point each
    if (cs == Case::C1Center && cn[0] == 1 && cn[1] == 1 && cn[2] == 1) {
        node.hit("th.c1.center.tiny");
        Perm perm{0, 1, 2};
        UpAnchor<S> g1{perm, phys, 1};
        auto grown = shape_for_count<S>(g1, anchor_order<S>(g1, pts, members),
                                        static_cast<std::size_t>(cn[1] + 1), half);
        check_grow(node, members, grown);
        DownAnchor<S> cr_anchor{perm, {half - phys[0], half - phys[1], half - phys[2]}, 1};
        auto kept = shape_for_count<S>(cr_anchor, anchor_order<S>(cr_anchor, pts, cm),
                                       static_cast<std::size_t>(nc - 1), S(0));
        return run_family<S>(node, cont,
                             {{grown.shape, grown.members, std::nullopt},
                              {kept.shape, kept.members, std::nullopt}},
                             m + 1, &solve_theta<S>);
    }
    if (cs == Case::C2R3Zero) {
        int z = special;
        if (cn[z] == 0 && cn[(z + 1) % 3] == 1 && cn[(z + 2) % 3] == 1) {
            node.hit("th.c2.r3zero.tiny");
            Perm perm{(z + 2) % 3, z, (z + 1) % 3};  // cyclic with perm[1] = z
            UpAnchor<S> g2{perm, {phys[perm[0]], phys[perm[1]], phys[perm[2]]}, 2};
            auto grown = shape_for_count<S>(g2, anchor_order<S>(g2, pts, members),
                                            static_cast<std::size_t>(cn[perm[2]] + 1), half);
            check_grow(node, members, grown);
            std::array<S, 3> l3{half - phys[perm[0]], half - phys[perm[1]], half - phys[perm[2]]};
            DownAnchor<S> cl{perm, l3, 2};
            auto kept = shape_for_count<S>(cl, anchor_order<S>(cl, pts, cm),
                                           static_cast<std::size_t>(nc - 1), S(0));
            return run_family<S>(node, cont,
                                 {{grown.shape, grown.members, std::nullopt},
                                  {kept.shape, kept.members, std::nullopt}},
                                 m + 1, &solve_theta<S>);
        }
    }
    if (cs == Case::C2R3One) {
        int o = special;
        if (cn[o] == 1 && cn[(o + 1) % 3] == 0 && cn[(o + 2) % 3] == 0) {
            node.hit("th.c2.r3one.tiny");
            Perm perm{(o + 2) % 3, o, (o + 1) % 3};
            UpAnchor<S> g1{perm, {phys[perm[0]], phys[perm[1]], phys[perm[2]]}, 1};
            auto grown = shape_for_count<S>(g1, anchor_order<S>(g1, pts, members),
                                            static_cast<std::size_t>(cn[perm[1]] + 1), half);
            check_grow(node, members, grown);
            std::array<S, 3> l3{half - phys[perm[0]], half - phys[perm[1]], half - phys[perm[2]]};
            DownAnchor<S> crr{perm, l3, 1};
            auto kept = shape_for_count<S>(crr, anchor_order<S>(crr, pts, cm),
                                           static_cast<std::size_t>(nc - 1), S(0));
            return run_family<S>(node, cont,
                                 {{grown.shape, grown.members, std::nullopt},
                                  {kept.shape, kept.members, std::nullopt}},
                                 m + 1, &solve_theta<S>);
        }
    }

    // corner shrink amounts by residue
    auto shrink_for_residue = [&](int axis) {
        if (cs == Case::C1Center) return 3;
        if (cs == Case::C1Corner) return axis == special ? 1 : 3;
        if (cs == Case::C2R3Zero) return axis == special ? 2 : 3;
        return axis == special ? 3 : 2;  // C2R3One
    };

    // logical view under a permutation (logical axes -> physical axes)
    struct Logical {
        Perm perm;
        std::array<S, 3> la, l3;
        std::array<Homothet<S>, 3> qs;
        std::array<const std::vector<int>*, 3> qmm;
        std::array<int, 3> qn;
        std::array<AnchoredShape<S>, 3> E;
        std::array<int, 3> ex;  // shrink amounts
    };
    auto make_logical = [&](Perm perm) {
        Logical lg;
        lg.perm = perm;
        for (int k = 0; k < 3; ++k) {
            lg.la[k] = phys[perm[k]];
            lg.l3[k] = half - phys[perm[k]];
            lg.qs[k] = qshape[perm[k]];
            lg.qmm[k] = &qm[perm[k]];
            lg.qn[k] = cn[perm[k]];
            lg.ex[k] = shrink_for_residue(perm[k]);
            UpAnchor<S> an{perm, {phys[perm[0]], phys[perm[1]], phys[perm[2]]}, k};
            auto order = anchor_order<S>(an, pts, *lg.qmm[k]);
            sm_require(order.size() == lg.qmm[k]->size(), "theta shrink: member outside wedge");
            lg.E[k] = shape_for_count<S>(
                an, order, static_cast<std::size_t>(std::max(0, lg.qn[k] - lg.ex[k])), S(0));
        }
        // logical bounds must be consistent
        return lg;
    };

    // choose the permutation: distinguished corner to logical 1 (cases with a
    // corner special), then largest shrink to logical 1 (case a) or 2 (case b)
    Perm perm{0, 1, 2};
    if (cs == Case::C1Center) {
        Logical probe = make_logical({0, 1, 2});
        int best = 0;
        for (int k = 1; k < 3; ++k)
            if (probe.E[k].shape.scale() > probe.E[best].shape.scale()) best = k;
        perm = {(best + 2) % 3, best, (best + 1) % 3};
    } else {
        perm = {(special + 2) % 3, special, (special + 1) % 3};
    }
    Logical lg = make_logical(perm);
    bool case_a;
    if (cs == Case::C1Center) {
        case_a = true;
    } else {
        int best = 0;
        for (int k = 1; k < 3; ++k)
            if (lg.E[k].shape.scale() > lg.E[best].shape.scale()) best = k;
        if (best == 1) {
            case_a = true;
        } else {
            case_a = false;
            if (best == 0) {  // reflect so the largest sits at logical 2
                perm = {perm[2], perm[1], perm[0]};
                lg = make_logical(perm);
            }
        }
    }
    if (cs == Case::C1Corner) { t_l2 = case_a ? 1 : 3; t_l1 = 1; }
    if (cs == Case::C2R3Zero) { t_l2 = case_a ? 1 : 2; t_l1 = 1; }
    if (cs == Case::C2R3One) { t_l2 = case_a ? 2 : 1; t_l1 = 2; }

    auto lv = [&](int i, int k) { return functional<S>(pts[i], lg.perm[k]); };
    auto up_grow = [&](int k, int x) {
        UpAnchor<S> an{lg.perm, lg.la, k};
        auto order = anchor_order<S>(an, pts, members);
        auto out = shape_for_count<S>(an, order,
                                      static_cast<std::size_t>(lg.qn[k] + x), half);
        check_grow(node, members, out);
        return PlannedRegion<S>{out.shape, out.members, std::nullopt};
    };
    auto center_shrink = [&](int grow_axis, int x) {
        DownAnchor<S> an{lg.perm, lg.l3, grow_axis};
        auto order = anchor_order<S>(an, pts, cm);
        sm_require(order.size() == cm.size(), "theta center shrink: member outside wedge");
        auto out = shape_for_count<S>(an, order,
                                      static_cast<std::size_t>(std::max(0, nc - x)), S(0));
        return PlannedRegion<S>{out.shape, out.members, std::nullopt};
    };
    auto shr = [&](int k) { return PlannedRegion<S>{lg.E[k].shape, lg.E[k].members, std::nullopt}; };
    auto whole = [&](int k) {
        return PlannedRegion<S>{lg.qs[k], *lg.qmm[k], sub[lg.perm[k]]};
    };
    auto count_if = [&](std::initializer_list<const std::vector<int>*> sets, auto pred) {
        int c = 0;
        for (const auto* s : sets)
            for (int i : *s)
                if (pred(i)) ++c;
        return c;
    };

    if (case_a) {
        const S s1 = lg.E[1].shape.scale();
        auto right_l2 = [&](int i) { return lv(i, 2) > s1 - lg.la[2]; };
        auto above_l1 = [&](int i) { return lv(i, 0) > s1 - lg.la[0]; };
        const char* tag = cs == Case::C1Center ? "th.c1.center"
                          : cs == Case::C1Corner ? "th.c1.corner.a"
                          : cs == Case::C2R3Zero ? "th.c2.r3zero.a"
                                                 : "th.c2.r3one.a";
        if (count_if({lg.qmm[0], lg.qmm[1], &cm}, right_l2) >= t_l2) {
            node.hit(std::string(tag) + ".l2");
            return run_family<S>(node, cont,
                                 {shr(0), shr(1), center_shrink(2, t_l2), up_grow(2, t_l2)}, m + 1,
                                 &solve_theta<S>);
        }
        if (count_if({lg.qmm[1], &cm, lg.qmm[2]}, above_l1) >= t_l1) {
            node.hit(std::string(tag) + ".l1");
            return run_family<S>(node, cont,
                                 {up_grow(0, t_l1), shr(1), center_shrink(0, t_l1), shr(2)}, m + 1,
                                 &solve_theta<S>);
        }
        node.hit(std::string(tag) + ".sprime");
        std::array<S, 3> ph{};
        ph[lg.perm[0]] = s1 - lg.la[0];
        ph[lg.perm[1]] = lg.la[0] + lg.la[2] - s1;
        ph[lg.perm[2]] = s1 - lg.la[2];
        Homothet<S> sprime = Homothet<S>::tri_down(ph[0], ph[1], ph[2]);
        std::vector<int> sp_members;
        for (int i : cm)
            if (contains_closed(sprime, pts[i])) sp_members.push_back(i);
        for (int i : set_difference_sorted(*lg.qmm[1], lg.E[1].members))
            if (contains_closed(sprime, pts[i])) sp_members.push_back(i);
        std::sort(sp_members.begin(), sp_members.end());
        sm_require(static_cast<int>(sp_members.size()) >= nc + sprime_extra,
                   "S' region under-filled");
        return run_family<S>(node, cont,
                             {whole(0), shr(1), {sprime, sp_members, std::nullopt}, whole(2)},
                             m + 1, &solve_theta<S>);
    }

    // case b: largest at logical 2
    const S s2 = lg.E[2].shape.scale();
    auto above_l1 = [&](int i) { return lv(i, 0) > s2 - lg.la[0]; };
    auto left_l2 = [&](int i) { return lv(i, 1) > s2 - lg.la[1]; };
    const char* tag = cs == Case::C1Corner ? "th.c1.corner.b"
                      : cs == Case::C2R3Zero ? "th.c2.r3zero.b"
                                             : "th.c2.r3one.b";
    if (count_if({lg.qmm[1], &cm, lg.qmm[2]}, above_l1) >= t_l1) {
        node.hit(std::string(tag) + ".l1");
        return run_family<S>(node, cont,
                             {up_grow(0, t_l1), shr(1), center_shrink(0, t_l1), shr(2)}, m + 1,
                             &solve_theta<S>);
    }
    if (count_if({lg.qmm[0], &cm, lg.qmm[2]}, left_l2) >= t_l2) {
        node.hit(std::string(tag) + ".l2");
        return run_family<S>(node, cont,
                             {shr(0), up_grow(1, t_l2), center_shrink(1, t_l2), shr(2)}, m + 1,
                             &solve_theta<S>);
    }
    node.hit(std::string(tag) + ".sprime");
    std::array<S, 3> ph{};
    ph[lg.perm[0]] = s2 - lg.la[0];
    ph[lg.perm[1]] = s2 - lg.la[1];
    ph[lg.perm[2]] = lg.la[0] + lg.la[1] - s2;
    Homothet<S> sprime = Homothet<S>::tri_down(ph[0], ph[1], ph[2]);
    std::vector<int> sp_members;
    for (int i : cm)
        if (contains_closed(sprime, pts[i])) sp_members.push_back(i);
    for (int i : set_difference_sorted(*lg.qmm[2], lg.E[2].members))
        if (contains_closed(sprime, pts[i])) sp_members.push_back(i);
    std::sort(sp_members.begin(), sp_members.end());
    sm_require(static_cast<int>(sp_members.size()) >= nc + sprime_extra, "S' region under-filled");
    return run_family<S>(node, cont,
                         {whole(0), whole(1), {sprime, sp_members, std::nullopt}, shr(2)}, m + 1,
                         &solve_theta<S>);
}

template <class S>
std::vector<MatchedPair<S>> solve_theta(const Node<S>& node, const Homothet<S>& container,
                                        const std::vector<int>& members) {
    if (container.kind == ShapeKind::TriUp) return solve_theta_up(node, container, members);
    sm_require(container.kind == ShapeKind::TriDown, "theta container must be a triangle");
    // flip the frame by a half turn about the container centroid
    auto vs = tri_vertices(container);
    Pt<S> centroid{(vs[0].x + vs[1].x + vs[2].x) / S(3), (vs[0].y + vs[1].y + vs[2].y) / S(3)};
    auto g = Isometry<S>::rotation60(3, centroid);  // involution
    std::vector<Pt<S>> flipped;
    flipped.reserve(node.pts->size());
    for (const auto& p : *node.pts) flipped.push_back(g.apply(p));
    Node<S> fnode{&flipped, node.stats, node.depth};
    auto res = solve_theta_up(fnode, apply_isometry(g, container), members);
    for (auto& pr : res) pr.rep = apply_isometry(g, pr.rep);
    return res;
}

}  // namespace rec_detail

// ---------- public entry points ----------

template <class S>
Homothet<S> bounding_square(const std::vector<Pt<S>>& pts) {
    using std::max;
    using std::min;
    if (pts.empty()) return Homothet<S>::square(S(0), S(0), S(1));
    S xlo = pts[0].x, xhi = pts[0].x, ylo = pts[0].y, yhi = pts[0].y;
    for (const auto& p : pts) {
        xlo = min(xlo, p.x); xhi = max(xhi, p.x);
        ylo = min(ylo, p.y); yhi = max(yhi, p.y);
    }
    S side = max(xhi - xlo, yhi - ylo);
    if (!(side > S(0))) side = S(1);
    // centered on the bounding box
    S cx = scalar_traits<S>::half(xlo + xhi), cy = scalar_traits<S>::half(ylo + yhi);
    S h = scalar_traits<S>::half(side);
    return Homothet<S>::square(cx - h, cy - h, side);
}

template <class S>
Homothet<S> bounding_tri_up(const std::vector<Pt<S>>& pts) {
    using std::max;
    if (pts.empty()) return Homothet<S>::tri_up(S(1), S(0), S(0));
    S a = S(0) - pts[0].u(), b = S(0) - pts[0].v(), c = S(0) - pts[0].w();
    for (const auto& p : pts) {
        a = max(a, S(0) - p.u());
        b = max(b, S(0) - p.v());
        c = max(c, S(0) - p.w());
    }
    if (!(a + b + c > S(0))) a = a + S(1);
    return Homothet<S>::tri_up(a, b, c);
}

template <class S>
StrongMatching<S> strong_match_square_recursive(const std::vector<Pt<S>>& pts,
                                                const Homothet<S>& container,
                                                RecursionStats* stats = nullptr) {
    if (container.kind != ShapeKind::Square)
        throw std::invalid_argument("square recursion needs a square container");
    std::vector<int> all(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!contains_closed(container, pts[i]))
            throw std::invalid_argument("point outside container");
        all[i] = static_cast<int>(i);
    }
    rec_detail::Node<S> node{&pts, stats, 0};
    StrongMatching<S> m;
    m.shape = MatchShape::Square;
    m.mode = DisjointMode::Interior;
    m.pairs = rec_detail::solve_square(node, container, all);
    sm_require(m.size() >= rec_detail::ceil_bound(pts.size()), "square engine missed the bound");
    return m;
}

template <class S>
StrongMatching<S> strong_match_theta_recursive(const std::vector<Pt<S>>& pts,
                                               const Homothet<S>& container,
                                               RecursionStats* stats = nullptr) {
    if (!is_triangle(container.kind))
        throw std::invalid_argument("theta recursion needs a triangle container");
    std::vector<int> all(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!contains_closed(container, pts[i]))
            throw std::invalid_argument("point outside container");
        all[i] = static_cast<int>(i);
    }
    rec_detail::Node<S> node{&pts, stats, 0};
    StrongMatching<S> m;
    m.shape = MatchShape::Theta6;
    m.mode = DisjointMode::Interior;
    m.pairs = rec_detail::solve_theta(node, container, all);
    sm_require(m.size() >= rec_detail::ceil_bound(pts.size()), "theta engine missed the bound");
    return m;
}

}  // namespace strongmatch
