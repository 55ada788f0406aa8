#pragma once

// Data-parallel inner loops of the double-precision pipeline.
//
// Every kernel exists twice: a scalar reference implementation and an AVX2
// variant.  Both are compiled with FP contraction off and use the same
// operation order, so their results are bit-identical; the equivalence suite
// enforces that on random inputs.  active() picks the widest table the CPU
// supports (STRONGMATCH_FORCE_SCALAR=1 overrides).

#include <cstddef>
#include <cstdint>
#include <vector>

namespace strongmatch::kernels {

// Structure-of-arrays view of a point set (coordinates plus the three cone
// functionals).
struct PointsView {
    const double* x = nullptr;
    const double* y = nullptr;
    const double* u = nullptr;
    const double* v = nullptr;
    const double* w = nullptr;
    std::size_t n = 0;
};

// Owning SoA built from xy pairs.
struct PointSoA {
    std::vector<double> x, y, u, v, w;

    PointSoA() = default;
    explicit PointSoA(const std::vector<std::pair<double, double>>& pts);

    void push_back(double px, double py);
    std::size_t size() const { return x.size(); }
    PointsView view() const { return {x.data(), y.data(), u.data(), v.data(), w.data(), x.size()}; }
};

struct KernelTable {
    // true iff some point other than skip_a/skip_b lies strictly inside the
    // open shape (strictness margin eps)
    bool (*any_in_open_disk)(const PointsView&, std::size_t skip_a, std::size_t skip_b,
                             double cx, double cy, double r, double eps);
    bool (*any_in_open_tri_down)(const PointsView&, std::size_t skip_a, std::size_t skip_b,
                                 double A, double B, double C, double eps);
    bool (*any_in_open_tri_up)(const PointsView&, std::size_t skip_a, std::size_t skip_b,
                               double A, double B, double C, double eps);
    bool (*any_in_open_square)(const PointsView&, std::size_t skip_a, std::size_t skip_b,
                               double x0, double y0, double s, double eps);
    // number of points with | |p-c| - r | <= eps
    int (*disk_boundary_count)(const PointsView&, double cx, double cy, double r, double eps);
    // out[i] = scale of the smallest homothet through points j and i
    void (*pair_scales_disk)(const PointsView&, std::size_t j, double* out);
    void (*pair_scales_tri_down)(const PointsView&, std::size_t j, double* out);
    void (*pair_scales_tri_up)(const PointsView&, std::size_t j, double* out);
    void (*pair_scales_square)(const PointsView&, std::size_t j, double* out);
    const char* name;
};

const KernelTable& scalar_table();
const KernelTable* avx2_table();  // nullptr when the CPU lacks AVX2
const KernelTable& active();

}  // namespace strongmatch::kernels
