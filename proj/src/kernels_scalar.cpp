// Scalar reference kernels.  The AVX2 variants mirror the exact operation
// order used here; keep the two files in sync.

#include "strongmatch/kernels.hpp"

#include <cmath>

namespace strongmatch::kernels {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;

bool any_in_open_disk_scalar(const PointsView& p, std::size_t a, std::size_t b,
                             double cx, double cy, double r, double eps) {
    // sqrt form, same comparison contains_open() uses
    const double lim = r - eps;
    if (lim <= 0) return false;
    for (std::size_t i = 0; i < p.n; ++i) {
        if (i == a || i == b) continue;
        const double dx = p.x[i] - cx;
        const double dy = p.y[i] - cy;
        if (std::sqrt(dx * dx + dy * dy) < lim) return true;
    }
    return false;
}

bool any_in_open_tri_down_scalar(const PointsView& p, std::size_t a, std::size_t b,
                                 double A, double B, double C, double eps) {
    const double la = A - eps, lb = B - eps, lc = C - eps;
    for (std::size_t i = 0; i < p.n; ++i) {
        if (i == a || i == b) continue;
        if (p.u[i] < la && p.v[i] < lb && p.w[i] < lc) return true;
    }
    return false;
}

bool any_in_open_tri_up_scalar(const PointsView& p, std::size_t a, std::size_t b,
                               double A, double B, double C, double eps) {
    const double la = -(A - eps), lb = -(B - eps), lc = -(C - eps);
    for (std::size_t i = 0; i < p.n; ++i) {
        if (i == a || i == b) continue;
        if (p.u[i] > la && p.v[i] > lb && p.w[i] > lc) return true;
    }
    return false;
}

bool any_in_open_square_scalar(const PointsView& p, std::size_t a, std::size_t b,
                               double x0, double y0, double s, double eps) {
    const double xl = x0 + eps, xh = x0 + s - eps;
    const double yl = y0 + eps, yh = y0 + s - eps;
    for (std::size_t i = 0; i < p.n; ++i) {
        if (i == a || i == b) continue;
        if (p.x[i] > xl && p.x[i] < xh && p.y[i] > yl && p.y[i] < yh) return true;
    }
    return false;
}

int disk_boundary_count_scalar(const PointsView& p, double cx, double cy, double r, double eps) {
    int cnt = 0;
    for (std::size_t i = 0; i < p.n; ++i) {
        const double dx = p.x[i] - cx;
        const double dy = p.y[i] - cy;
        const double d = std::sqrt(dx * dx + dy * dy);
        const double diff = d - r;
        if (diff <= eps && diff >= -eps) ++cnt;
    }
    return cnt;
}

void pair_scales_disk_scalar(const PointsView& p, std::size_t j, double* out) {
    const double px = p.x[j], py = p.y[j];
    for (std::size_t i = 0; i < p.n; ++i) {
        const double dx = p.x[i] - px;
        const double dy = p.y[i] - py;
        out[i] = 0.5 * std::sqrt(dx * dx + dy * dy);
    }
}

void pair_scales_tri_down_scalar(const PointsView& p, std::size_t j, double* out) {
    const double uj = p.u[j], vj = p.v[j], wj = p.w[j];
    for (std::size_t i = 0; i < p.n; ++i) {
        const double a = p.u[i] > uj ? p.u[i] : uj;
        const double b = p.v[i] > vj ? p.v[i] : vj;
        const double c = p.w[i] > wj ? p.w[i] : wj;
        out[i] = a + b + c;
    }
}

void pair_scales_tri_up_scalar(const PointsView& p, std::size_t j, double* out) {
    const double uj = p.u[j], vj = p.v[j], wj = p.w[j];
    for (std::size_t i = 0; i < p.n; ++i) {
        const double a = p.u[i] < uj ? p.u[i] : uj;
        const double b = p.v[i] < vj ? p.v[i] : vj;
        const double c = p.w[i] < wj ? p.w[i] : wj;
        out[i] = -(a + b + c);
    }
}

void pair_scales_square_scalar(const PointsView& p, std::size_t j, double* out) {
    const double px = p.x[j], py = p.y[j];
    for (std::size_t i = 0; i < p.n; ++i) {
        double dx = p.x[i] - px;
        double dy = p.y[i] - py;
        if (dx < 0) dx = -dx;
        if (dy < 0) dy = -dy;
        out[i] = dx > dy ? dx : dy;
    }
}

}  // namespace

PointSoA::PointSoA(const std::vector<std::pair<double, double>>& pts) {
    x.reserve(pts.size());
    for (const auto& [px, py] : pts) push_back(px, py);
}

void PointSoA::push_back(double px, double py) {
    x.push_back(px);
    y.push_back(py);
    u.push_back(py);
    v.push_back(0.5 * (-kSqrt3 * px - py));
    w.push_back(0.5 * (kSqrt3 * px - py));
}

const KernelTable& scalar_table() {
    static const KernelTable t = {
        any_in_open_disk_scalar,
        any_in_open_tri_down_scalar,
        any_in_open_tri_up_scalar,
        any_in_open_square_scalar,
        disk_boundary_count_scalar,
        pair_scales_disk_scalar,
        pair_scales_tri_down_scalar,
        pair_scales_tri_up_scalar,
        pair_scales_square_scalar,
        "scalar",
    };
    return t;
}

}  // namespace strongmatch::kernels
