#pragma once

// Independent certification of strong matchings.  Checks only definitions,
// never algorithm internals:
//   (a) pairs are vertex-disjoint
//   (b) both endpoints lie on each representative's closed boundary
//   (c) no other input point lies in a representative's open interior
//   (d) representatives are pairwise disjoint under the requested mode
//   (e) optionally, every representative lies inside a container

#include <optional>
#include <string>
#include <vector>

#include "strongmatch/matching.hpp"

namespace strongmatch {

struct CertFailure {
    std::string check;
    std::vector<int> indices;  // offending pair indices into matching.pairs (or point ids)
};

struct Certificate {
    bool pass{true};
    std::vector<CertFailure> failures;
    int boundary_contacts{0};  // informational: representative pairs sharing boundary only

    void fail(std::string check, std::vector<int> idx) {
        pass = false;
        failures.push_back({std::move(check), std::move(idx)});
    }
};

// Pairs whose representative fails the closed-exactness test (the closed
// shape must contain its two endpoints and nothing else).
template <class S>
std::vector<int> exact_occupancy_failures(const std::vector<Pt<S>>& pts, const StrongMatching<S>& m) {
    std::vector<int> bad;
    for (int a = 0; a < m.size(); ++a) {
        const auto& pr = m.pairs[a];
        int cnt = 0;
        for (int t = 0; t < static_cast<int>(pts.size()); ++t)
            if (contains_closed(pr.rep, pts[t])) ++cnt;
        bool ends = contains_closed(pr.rep, pts[pr.i]) && contains_closed(pr.rep, pts[pr.j]);
        if (cnt != 2 || !ends) bad.push_back(a);
    }
    return bad;
}

template <class S>
Certificate verify_strong(const std::vector<Pt<S>>& pts, const StrongMatching<S>& m,
                          DisjointMode mode,
                          const std::optional<Homothet<S>>& container = std::nullopt) {
    Certificate cert;
    const int k = m.size();

    std::vector<char> used(pts.size(), 0);
    for (int a = 0; a < k; ++a) {
        const auto& pr = m.pairs[a];
        if (pr.i == pr.j || pr.i < 0 || pr.j < 0 || pr.i >= static_cast<int>(pts.size()) ||
            pr.j >= static_cast<int>(pts.size())) {
            cert.fail("pair-indices", {a});
            continue;
        }
        if (used[pr.i] || used[pr.j]) cert.fail("vertex-disjoint", {a});
        used[pr.i] = used[pr.j] = 1;

        if (!on_boundary(pr.rep, pts[pr.i]) || !on_boundary(pr.rep, pts[pr.j]))
            cert.fail("endpoints-on-boundary", {a});

        for (int t = 0; t < static_cast<int>(pts.size()); ++t) {
            if (t == pr.i || t == pr.j) continue;
            if (contains_open(pr.rep, pts[t])) {
                cert.fail("open-interior-empty", {a, t});
                break;
            }
        }

        if (container && !contains_homothet(*container, pr.rep)) cert.fail("inside-container", {a});
    }

    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            bool closed = intersects(m.pairs[a].rep, m.pairs[b].rep);
            bool open = interiors_intersect(m.pairs[a].rep, m.pairs[b].rep);
            if (closed && !open) ++cert.boundary_contacts;
            if (mode == DisjointMode::Strict ? closed : open)
                cert.fail("pairwise-disjoint", {a, b});
        }
    }
    return cert;
}

}  // namespace strongmatch
