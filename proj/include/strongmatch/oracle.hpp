#pragma once

// Brute-force maximum strong matching for tiny instances, independent of the
// engines: it enumerates every matching of the complete graph and decides
// realizability from first principles.
//
// Disks and triangles have canonical smallest representatives, so a matching
// is realizable iff those are empty and pairwise disjoint (theta tries both
// orientations per pair).  Squares carry one free offset per edge; pairwise
// disjointness becomes a system of difference constraints over the offsets,
// decided exactly per choice of surviving interval piece and separation
// disjunct.

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "strongmatch/matching.hpp"
#include "strongmatch/shape_graph.hpp"
#include "strongmatch/verify.hpp"

namespace strongmatch {

enum class Engine { Greedy, Recursive };

inline const char* to_string(Engine e) { return e == Engine::Greedy ? "greedy" : "recursive"; }

// Paper-backed constant-denominator guarantee for an engine/shape pair;
// 0 when the pair carries no constant bound (greedy squares rely on the
// measured influence number instead).
inline int bound_denominator(MatchShape shape, Engine engine) {
    if (engine == Engine::Greedy) {
        switch (shape) {
            case MatchShape::Disk: return 17;
            case MatchShape::TriDown:
            case MatchShape::TriUp: return 9;
            default: return 0;
        }
    }
    switch (shape) {
        case MatchShape::Theta6:
        case MatchShape::Square: return 4;
        default: return 0;
    }
}

inline int check_bound(int n, MatchShape shape, Engine engine) {
    if (n <= 1) return 0;
    int d = bound_denominator(shape, engine);
    return d ? ceil_div(n - 1, d) : 0;
}

namespace oracle_detail {

template <class S>
bool rep_empty(const std::vector<Pt<S>>& pts, int i, int j, const Homothet<S>& h) {
    for (int k = 0; k < static_cast<int>(pts.size()); ++k) {
        if (k == i || k == j) continue;
        if (contains_open(h, pts[k])) return false;
    }
    return true;
}

// ----- square realizability: difference constraints over free offsets -----

struct Constraint {  // lambda[a] - lambda[b] >= c  (strict when strict=true)
    int a, b;
    double c;
    bool strict;
};

// Bellman-Ford feasibility; node count <= 5.  Margin is added to strict
// constraints, turning the system non-strict.
inline bool difference_feasible(int nodes, const std::vector<Constraint>& cs, double margin,
                                std::vector<double>* out) {
    std::vector<double> pot(nodes, 0.0);
    for (int it = 0; it <= nodes; ++it) {
        bool changed = false;
        for (const auto& c : cs) {
            double need = pot[c.b] + c.c + (c.strict ? margin : 0.0);
            if (pot[c.a] < need) {
                pot[c.a] = need;
                changed = true;
            }
        }
        if (!changed) {
            if (out) *out = pot;
            return true;
        }
    }
    return false;
}

template <class S>
struct SquareEdgeVar {
    SquareFamily<S> fam;
    std::vector<std::pair<S, S>> pieces;  // surviving closed offset intervals
};

// Surviving offset pieces of the smallest-square family (same exclusion
// semantics as the graph builder).
template <class S>
std::vector<std::pair<S, S>> surviving_pieces(const std::vector<Pt<S>>& pts, int i, int j,
                                              const SquareFamily<S>& f) {
    const S eps = scalar_traits<S>::tol();
    std::vector<std::pair<S, S>> excl;
    for (int k = 0; k < static_cast<int>(pts.size()); ++k) {
        if (k == i || k == j) continue;
        const S fixed = f.x_dominant ? pts[k].x : pts[k].y;
        if (!(fixed > f.fixed_lo + eps && fixed < f.fixed_lo + f.side - eps)) continue;
        const S free = f.x_dominant ? pts[k].y : pts[k].x;
        excl.emplace_back(free - f.side + eps, free - eps);
    }
    std::sort(excl.begin(), excl.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<S, S>> pieces;
    S lo = f.free_lo;
    for (const auto& [elo, ehi] : excl) {
        if (lo > f.free_hi) break;
        if (elo > lo) {
            S hi = elo < f.free_hi ? elo : f.free_hi;
            if (lo <= hi) pieces.emplace_back(lo, hi);
        }
        if (ehi > lo) lo = ehi;
    }
    if (lo <= f.free_hi) pieces.emplace_back(lo, f.free_hi);
    return pieces;
}

// Axis interval of edge e's square: base + (free ? lambda : 0), length side.
struct AxisIv {
    double base;
    bool free;
};

template <class S>
std::pair<AxisIv, AxisIv> axis_ivs(const SquareFamily<S>& f) {
    double fixed = scalar_traits<S>::to_double(f.fixed_lo);
    AxisIv x{fixed, false}, y{0.0, true};
    if (!f.x_dominant) std::swap(x, y);
    return {x, y};
}

// Separation disjuncts for one pair of free squares: each option is one
// constraint (or a constant truth) forcing a gap > eps on some axis.
struct Disjunct {
    bool constant_true;
    bool has_constraint;
    Constraint c;
};

template <class S>
std::vector<Disjunct> pair_disjuncts(int e, int f, const SquareEdgeVar<S>& E,
                                     const SquareEdgeVar<S>& F, int zero_node) {
    const double eps = scalar_traits<double>::tol();
    const double se = scalar_traits<S>::to_double(E.fam.side);
    const double sf = scalar_traits<S>::to_double(F.fam.side);
    auto [ex, ey] = axis_ivs(E.fam);
    auto [fx, fy] = axis_ivs(F.fam);
    std::vector<Disjunct> out;
    auto add = [&](const AxisIv& a, double alen, int anode, const AxisIv& b, double blen, int bnode) {
        // a entirely left of b: b.lo - a.hi > eps  <=>  b.lo - a.lo > alen + eps
        (void)blen;
        double c = alen + eps;
        if (a.free && b.free)
            out.push_back({false, true, {bnode, anode, c, true}});
        else if (a.free && !b.free)  // b.base - lambda_a > alen+eps  =>  zero - a >= c - b.base
            out.push_back({false, true, {zero_node, anode, c - b.base, true}});
        else if (!a.free && b.free)  // lambda_b > a.base + alen + eps
            out.push_back({false, true, {bnode, zero_node, a.base + c, true}});
        else
            out.push_back({b.base - a.base > c, false, {}});
    };
    add(ex, se, e, fx, sf, f);  // e left of f  (x axis)
    add(fx, sf, f, ex, se, e);  // f left of e
    add(ey, se, e, fy, sf, f);  // e below f    (y axis)
    add(fy, sf, f, ey, se, e);  // f above e
    return out;
}

template <class S>
bool square_assign(const std::vector<SquareEdgeVar<S>>& vars, std::size_t next,
                   std::vector<Constraint>& cs, std::vector<double>* out_lambda) {
    const std::size_t k = vars.size();
    const int zero = static_cast<int>(k);
    if (next == k) {
        // margins: strict separations need positive slack; try a ladder
        for (double margin : {1e-3, 1e-6, 1e-9, 1e-12, 1e-15}) {
            std::vector<double> pot;
            if (difference_feasible(zero + 1, cs, margin, &pot)) {
                if (out_lambda) {
                    out_lambda->assign(k, 0.0);
                    for (std::size_t i = 0; i < k; ++i) (*out_lambda)[i] = pot[i] - pot[zero];
                }
                return true;
            }
        }
        return false;
    }
    const auto& E = vars[next];
    for (const auto& [plo, phi] : E.pieces) {
        std::size_t mark = cs.size();
        cs.push_back({static_cast<int>(next), zero, scalar_traits<S>::to_double(plo), false});
        cs.push_back({zero, static_cast<int>(next), -scalar_traits<S>::to_double(phi), false});
        // choose a disjunct against every earlier edge
        std::vector<std::vector<Disjunct>> options;
        for (std::size_t f = 0; f < next; ++f)
            options.push_back(pair_disjuncts(static_cast<int>(next), static_cast<int>(f), E, vars[f], zero));
        std::vector<std::size_t> pick(options.size(), 0);
        auto rec = [&](auto&& self, std::size_t level) -> bool {
            if (level == options.size()) {
                if (!difference_feasible(zero + 1, cs, 0.0, nullptr)) return false;
                return square_assign(vars, next + 1, cs, out_lambda);
            }
            for (const auto& d : options[level]) {
                if (d.constant_true) {
                    if (self(self, level + 1)) return true;
                } else if (d.has_constraint) {
                    cs.push_back(d.c);
                    bool ok = self(self, level + 1);
                    cs.pop_back();
                    if (ok) return true;
                }
            }
            return false;
        };
        if (rec(rec, 0)) return true;
        cs.resize(mark);
    }
    return false;
}

template <class S>
bool realize_squares(const std::vector<Pt<S>>& pts, const std::vector<std::pair<int, int>>& pairs,
                     std::vector<Homothet<S>>* reps) {
    std::vector<SquareEdgeVar<S>> vars;
    for (auto [i, j] : pairs) {
        SquareEdgeVar<S> v{square_family(pts[i], pts[j]), {}};
        v.pieces = surviving_pieces(pts, i, j, v.fam);
        if (v.pieces.empty()) return false;  // not an edge of the L-inf Delaunay graph
        vars.push_back(std::move(v));
    }
    std::vector<Constraint> cs;
    std::vector<double> lambda;
    if (!square_assign(vars, 0, cs, &lambda)) return false;
    if (reps) {
        reps->clear();
        for (std::size_t e = 0; e < vars.size(); ++e)
            reps->push_back(square_at_offset(vars[e].fam, S(lambda[e])));
    }
    return true;
}

template <class S>
bool realize_fixed(const std::vector<Pt<S>>& pts, const std::vector<std::pair<int, int>>& pairs,
                   ShapeKind kind, std::vector<Homothet<S>>* reps) {
    std::vector<Homothet<S>> r;
    for (auto [i, j] : pairs) {
        auto h = smallest_homothet(pts[i], pts[j], kind);
        if (!rep_empty(pts, i, j, h)) return false;
        r.push_back(h);
    }
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = a + 1; b < r.size(); ++b)
            if (intersects(r[a], r[b])) return false;
    if (reps) *reps = std::move(r);
    return true;
}

template <class S>
bool realize_theta(const std::vector<Pt<S>>& pts, const std::vector<std::pair<int, int>>& pairs,
                   std::vector<Homothet<S>>* reps) {
    const std::size_t k = pairs.size();
    std::vector<std::array<std::optional<Homothet<S>>, 2>> cand(k);
    for (std::size_t e = 0; e < k; ++e) {
        auto [i, j] = pairs[e];
        auto td = smallest_tri_down(pts[i], pts[j]);
        auto tu = smallest_tri_up(pts[i], pts[j]);
        if (rep_empty(pts, i, j, td)) cand[e][0] = td;
        if (rep_empty(pts, i, j, tu)) cand[e][1] = tu;
        if (!cand[e][0] && !cand[e][1]) return false;
    }
    std::vector<Homothet<S>> chosen(k);
    auto rec = [&](auto&& self, std::size_t e) -> bool {
        if (e == k) return true;
        for (int o = 0; o < 2; ++o) {
            if (!cand[e][o]) continue;
            bool ok = true;
            for (std::size_t f = 0; f < e && ok; ++f)
                if (intersects(chosen[f], *cand[e][o])) ok = false;
            if (!ok) continue;
            chosen[e] = *cand[e][o];
            if (self(self, e + 1)) return true;
        }
        return false;
    };
    if (!rec(rec, 0)) return false;
    if (reps) *reps = std::move(chosen);
    return true;
}

template <class S>
bool realizable(const std::vector<Pt<S>>& pts, const std::vector<std::pair<int, int>>& pairs,
                MatchShape shape, std::vector<Homothet<S>>* reps) {
    switch (shape) {
        case MatchShape::Disk: return realize_fixed(pts, pairs, ShapeKind::Disk, reps);
        case MatchShape::TriDown: return realize_fixed(pts, pairs, ShapeKind::TriDown, reps);
        case MatchShape::TriUp: return realize_fixed(pts, pairs, ShapeKind::TriUp, reps);
        case MatchShape::Theta6: return realize_theta(pts, pairs, reps);
        case MatchShape::Square: return realize_squares(pts, pairs, reps);
    }
    return false;
}

}  // namespace oracle_detail

template <class S>
struct OracleResult {
    int max_size{0};
    StrongMatching<S> witness;
};

template <class S>
OracleResult<S> oracle_max_strong(const std::vector<Pt<S>>& pts, MatchShape shape, int cap = 8) {
    const int n = static_cast<int>(pts.size());
    if (n > cap) throw std::invalid_argument("oracle_max_strong: instance over cap");

    OracleResult<S> best;
    best.witness.shape = shape;
    best.witness.mode = DisjointMode::Strict;

    std::vector<std::pair<int, int>> cur;
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int v) -> void {
        while (v < n && used[v]) ++v;
        if (v >= n) {
            if (static_cast<int>(cur.size()) <= best.max_size) return;
            std::vector<Homothet<S>> reps;
            if (oracle_detail::realizable(pts, cur, shape, &reps)) {
                best.max_size = static_cast<int>(cur.size());
                best.witness.pairs.clear();
                for (std::size_t e = 0; e < cur.size(); ++e)
                    best.witness.pairs.push_back({cur[e].first, cur[e].second, reps[e]});
            }
            return;
        }
        used[v] = 1;
        for (int u = v + 1; u < n; ++u) {
            if (used[u]) continue;
            used[u] = 1;
            cur.emplace_back(v, u);
            self(self, v + 1);
            cur.pop_back();
            used[u] = 0;
        }
        used[v] = 0;
        self(self, v + 1);  // leave v unmatched
    };
    rec(rec, 0);
    return best;
}

}  // namespace strongmatch
