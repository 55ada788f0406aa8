#pragma once

// Seeded deterministic generation.  Doubles come from an explicit 53-bit
// mapping so files are identical across standard libraries.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "strongmatch/general_position.hpp"
#include "strongmatch/matching.hpp"

namespace strongmatch {

class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    int uniform_int(int lo, int hi) {  // inclusive ends
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

// Uniform points in the unit square, rejection-resampled until the whole set
// passes the general-position check for the requested mode.
inline std::vector<Point> generate_points(int n, std::uint64_t seed, GpMode mode) {
    DetRng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Point> pts;
        pts.reserve(n);
        for (int i = 0; i < n; ++i) {
            double x = rng.uniform01();
            double y = rng.uniform01();
            pts.push_back({x, y});
        }
        if (check_general_position(pts, mode).ok()) return pts;
    }
    throw std::runtime_error("generate_points: could not reach general position");
}

inline GpMode gp_mode_of(MatchShape shape) {
    switch (shape) {
        case MatchShape::Disk: return GpMode::Disk;
        case MatchShape::Square: return GpMode::Square;
        default: return GpMode::Triangle;
    }
}

}  // namespace strongmatch
