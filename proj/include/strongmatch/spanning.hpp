#pragma once

// Minimum spanning tree of the complete area-weighted graph K_S(P), plus the
// influence-set machinery of the greedy matching algorithm.
//
// All edge comparisons go through the total order (weight, i, j); it breaks
// ties deterministically and makes the MST unique.

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "strongmatch/shape_graph.hpp"

namespace strongmatch {

template <class S>
struct TreeEdge {
    int i{}, j{};
    S weight{};
    Homothet<S> rep;
};

template <class S>
bool edge_order_less(const S& wa, int ia, int ja, const S& wb, int ib, int jb) {
    if (wa != wb) return wa < wb;
    if (ia != ib) return ia < ib;
    return ja < jb;
}

template <class S>
bool edge_order_less(const TreeEdge<S>& a, const TreeEdge<S>& b) {
    return edge_order_less(a.weight, a.i, a.j, b.weight, b.i, b.j);
}

template <class S>
struct SpanningTree {
    ShapeKind kind{};
    int n{};
    std::vector<TreeEdge<S>> edges;  // ascending under the total order

    int find_edge(int a, int b) const {
        if (a > b) std::swap(a, b);
        for (int k = 0; k < static_cast<int>(edges.size()); ++k)
            if (edges[k].i == a && edges[k].j == b) return k;
        return -1;
    }
};

template <class S>
S pair_scale(const std::vector<Pt<S>>& pts, int i, int j, ShapeKind kind) {
    return smallest_homothet(pts[i], pts[j], kind).scale();
}

// Prim on the complete graph; O(n^2) with kernel-accelerated row updates in
// double mode.
template <class S>
SpanningTree<S> mst(const std::vector<Pt<S>>& pts, ShapeKind kind) {
    const int n = static_cast<int>(pts.size());
    SpanningTree<S> t{kind, n, {}};
    if (n <= 1) return t;

    std::vector<char> in_tree(n, 0);
    std::vector<int> parent(n, -1);
    std::vector<S> key(n);
    std::vector<char> has_key(n, 0);

    auto soa = detail::make_soa(pts);
    std::vector<double> row;
    if constexpr (!scalar_traits<S>::exact) row.resize(n);

    auto relax_from = [&](int j) {
        if constexpr (!scalar_traits<S>::exact) {
            const auto& K = kernels::active();
            auto view = soa->view();
            switch (kind) {
                case ShapeKind::Disk: K.pair_scales_disk(view, j, row.data()); break;
                case ShapeKind::TriDown: K.pair_scales_tri_down(view, j, row.data()); break;
                case ShapeKind::TriUp: K.pair_scales_tri_up(view, j, row.data()); break;
                case ShapeKind::Square: K.pair_scales_square(view, j, row.data()); break;
            }
            for (int v = 0; v < n; ++v) {
                if (in_tree[v]) continue;
                const double wv = row[v];
                if (!has_key[v] ||
                    edge_order_less(wv, std::min(j, v), std::max(j, v), key[v],
                                    std::min(parent[v], v), std::max(parent[v], v))) {
                    key[v] = wv;
                    parent[v] = j;
                    has_key[v] = 1;
                }
            }
        } else {
            for (int v = 0; v < n; ++v) {
                if (in_tree[v] || v == j) continue;
                S wv = pair_scale(pts, j, v, kind);
                if (!has_key[v] ||
                    edge_order_less(wv, std::min(j, v), std::max(j, v), key[v],
                                    std::min(parent[v], v), std::max(parent[v], v))) {
                    key[v] = wv;
                    parent[v] = j;
                    has_key[v] = 1;
                }
            }
        }
    };

    in_tree[0] = 1;
    relax_from(0);
    for (int step = 1; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (in_tree[v] || !has_key[v]) continue;
            if (best < 0 ||
                edge_order_less(key[v], std::min(parent[v], v), std::max(parent[v], v), key[best],
                                std::min(parent[best], best), std::max(parent[best], best)))
                best = v;
        }
        if (best < 0) throw std::logic_error("mst: disconnected complete graph");
        in_tree[best] = 1;
        int a = std::min(parent[best], best), b = std::max(parent[best], best);
        TreeEdge<S> e{a, b, key[best], {}};
        if (kind == ShapeKind::Square) {
            auto rep = empty_square_representative(pts, a, b);
            if (!rep) throw std::logic_error("mst: square MST edge has no empty representative");
            e.rep = *rep;
        } else {
            e.rep = smallest_homothet(pts[a], pts[b], kind);
        }
        t.edges.push_back(e);
        relax_from(best);
    }
    std::sort(t.edges.begin(), t.edges.end(),
              [](const TreeEdge<S>& a, const TreeEdge<S>& b) { return edge_order_less(a, b); });
    return t;
}

template <class S>
struct InfluenceSet {
    TreeEdge<S> anchor;
    std::vector<TreeEdge<S>> members;  // includes the anchor
};

// Inf(e) = edges of T(e+) whose representatives meet S(e) (closed test).
template <class S>
InfluenceSet<S> influence_set(const SpanningTree<S>& t, int a, int b) {
    int idx = t.find_edge(a, b);
    if (idx < 0) throw std::invalid_argument("influence_set: edge not in tree");
    return influence_set_at(t, idx);
}

template <class S>
InfluenceSet<S> influence_set_at(const SpanningTree<S>& t, int idx) {
    InfluenceSet<S> inf{t.edges[idx], {}};
    for (int k = idx; k < static_cast<int>(t.edges.size()); ++k) {
        // edges are ordered, so suffix == T(e+)
        if (intersects(t.edges[k].rep, inf.anchor.rep)) inf.members.push_back(t.edges[k]);
    }
    return inf;
}

template <class S>
struct InfluenceNumber {
    int value{};
    TreeEdge<S> argmax;
};

template <class S>
InfluenceNumber<S> influence_number(const SpanningTree<S>& t) {
    if (t.edges.empty()) throw std::invalid_argument("influence_number: empty tree");
    InfluenceNumber<S> best{0, {}};
    for (int k = 0; k < static_cast<int>(t.edges.size()); ++k) {
        auto inf = influence_set_at(t, k);
        int sz = static_cast<int>(inf.members.size());
        if (sz > best.value) best = {sz, t.edges[k]};
    }
    return best;
}

// dg(e) = dg(u) + dg(v) - 1, degrees counted within T(e+).
template <class S>
int edge_degree(const SpanningTree<S>& t, int idx) {
    const auto& e = t.edges[idx];
    int du = 0, dv = 0;
    for (int k = idx; k < static_cast<int>(t.edges.size()); ++k) {
        const auto& f = t.edges[k];
        if (f.i == e.i || f.j == e.i) ++du;
        if (f.i == e.j || f.j == e.j) ++dv;
    }
    return du + dv - 1;
}

// e is minimal when no adjacent tree edge precedes it in the total order.
template <class S>
std::vector<int> minimal_edges(const SpanningTree<S>& t) {
    std::vector<int> out;
    const int m = static_cast<int>(t.edges.size());
    for (int k = 0; k < m; ++k) {
        bool minimal = true;
        for (int l = 0; l < k && minimal; ++l) {
            const auto& e = t.edges[k];
            const auto& f = t.edges[l];
            if (f.i == e.i || f.i == e.j || f.j == e.i || f.j == e.j) minimal = false;
        }
        if (minimal) out.push_back(k);
    }
    return out;
}

template <class S>
int max_minimal_edge_degree(const SpanningTree<S>& t) {
    int best = 0;
    for (int k : minimal_edges(t)) best = std::max(best, edge_degree(t, k));
    return best;
}

}  // namespace strongmatch
