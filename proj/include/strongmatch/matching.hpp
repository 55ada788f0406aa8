#pragma once

#include <vector>

#include "strongmatch/homothet.hpp"

namespace strongmatch {

// Matching shape family; Theta6 allows per-pair triangles of either
// orientation.
enum class MatchShape { Disk, TriDown, TriUp, Theta6, Square };

inline const char* to_string(MatchShape s) {
    switch (s) {
        case MatchShape::Disk: return "disk";
        case MatchShape::TriDown: return "tri-down";
        case MatchShape::TriUp: return "tri-up";
        case MatchShape::Theta6: return "theta6";
        case MatchShape::Square: return "square";
    }
    return "?";
}

enum class DisjointMode { Strict, Interior };

inline const char* to_string(DisjointMode m) {
    return m == DisjointMode::Strict ? "strict" : "interior";
}

template <class S>
struct MatchedPair {
    int i{}, j{};
    Homothet<S> rep;
};

template <class S>
struct StrongMatching {
    MatchShape shape{MatchShape::Disk};
    DisjointMode mode{DisjointMode::Strict};
    std::vector<MatchedPair<S>> pairs;

    int size() const { return static_cast<int>(pairs.size()); }
};

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace strongmatch
