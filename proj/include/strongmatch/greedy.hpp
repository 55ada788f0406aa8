#pragma once

// Greedy strong matching: repeatedly take the smallest remaining MST edge
// and delete every edge whose representative meets its representative.
// F is a plain edge set; deleting an influence set may disconnect it, which
// is fine since only the minimum is ever consumed.

#include <vector>

#include "strongmatch/matching.hpp"
#include "strongmatch/spanning.hpp"

namespace strongmatch {

template <class S>
MatchShape match_shape_of(ShapeKind k) {
    switch (k) {
        case ShapeKind::Disk: return MatchShape::Disk;
        case ShapeKind::TriDown: return MatchShape::TriDown;
        case ShapeKind::TriUp: return MatchShape::TriUp;
        case ShapeKind::Square: return MatchShape::Square;
    }
    return MatchShape::Disk;
}

template <class S>
StrongMatching<S> strong_match_greedy_on_tree(const SpanningTree<S>& t) {
    StrongMatching<S> m;
    m.shape = match_shape_of<S>(t.kind);
    m.mode = DisjointMode::Strict;
    std::vector<char> alive(t.edges.size(), 1);
    for (std::size_t k = 0; k < t.edges.size(); ++k) {
        if (!alive[k]) continue;  // edges come sorted, so k is the smallest of F
        const auto& e = t.edges[k];
        m.pairs.push_back({e.i, e.j, e.rep});
        for (std::size_t l = k; l < t.edges.size(); ++l)
            if (alive[l] && intersects(t.edges[l].rep, e.rep)) alive[l] = 0;
    }
    return m;
}

template <class S>
StrongMatching<S> strong_match_greedy(const std::vector<Pt<S>>& pts, ShapeKind kind) {
    return strong_match_greedy_on_tree(mst(pts, kind));
}

}  // namespace strongmatch
