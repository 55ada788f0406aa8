// AVX2 kernels.  Operation order matches kernels_scalar.cpp so results are
// bit-identical (no FMA, contraction disabled on this target).

#include "strongmatch/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cmath>

namespace strongmatch::kernels {

namespace {

// lane mask for indices {base..base+3} excluding a and b
inline __m256d skip_mask(std::size_t base, std::size_t a, std::size_t b) {
    alignas(32) double m[4];
    for (int k = 0; k < 4; ++k) {
        std::size_t i = base + static_cast<std::size_t>(k);
        m[k] = (i == a || i == b) ? 0.0 : 1.0;
    }
    const __m256d v = _mm256_load_pd(m);
    return _mm256_cmp_pd(v, _mm256_setzero_pd(), _CMP_NEQ_OQ);
}

bool any_in_open_disk_avx2(const PointsView& p, std::size_t a, std::size_t b,
                           double cx, double cy, double r, double eps) {
    const double lim = r - eps;
    if (lim <= 0) return false;
    const __m256d vcx = _mm256_set1_pd(cx);
    const __m256d vcy = _mm256_set1_pd(cy);
    const __m256d vlim = _mm256_set1_pd(lim);
    std::size_t i = 0;
    for (; i + 4 <= p.n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(p.x + i), vcx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(p.y + i), vcy);
        const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        const __m256d d = _mm256_sqrt_pd(d2);
        __m256d hit = _mm256_cmp_pd(d, vlim, _CMP_LT_OQ);
        hit = _mm256_and_pd(hit, skip_mask(i, a, b));
        if (_mm256_movemask_pd(hit)) return true;
    }
    for (; i < p.n; ++i) {
        if (i == a || i == b) continue;
        const double dx = p.x[i] - cx;
        const double dy = p.y[i] - cy;
        if (std::sqrt(dx * dx + dy * dy) < lim) return true;
    }
    return false;
}

bool any_in_open_tri_down_avx2(const PointsView& p, std::size_t a, std::size_t b,
                               double A, double B, double C, double eps) {
    const __m256d la = _mm256_set1_pd(A - eps);
    const __m256d lb = _mm256_set1_pd(B - eps);
    const __m256d lc = _mm256_set1_pd(C - eps);
    std::size_t i = 0;
    for (; i + 4 <= p.n; i += 4) {
        __m256d hit = _mm256_cmp_pd(_mm256_loadu_pd(p.u + i), la, _CMP_LT_OQ);
        hit = _mm256_and_pd(hit, _mm256_cmp_pd(_mm256_loadu_pd(p.v + i), lb, _CMP_LT_OQ));
        hit = _mm256_and_pd(hit, _mm256_cmp_pd(_mm256_loadu_pd(p.w + i), lc, _CMP_LT_OQ));
        hit = _mm256_and_pd(hit, skip_mask(i, a, b));
        if (_mm256_movemask_pd(hit)) return true;
    }
    const double sa = A - eps, sb = B - eps, sc = C - eps;
    for (; i < p.n; ++i) {
        if (i == a || i == b) continue;
        if (p.u[i] < sa && p.v[i] < sb && p.w[i] < sc) return true;
    }
    return false;
}

bool any_in_open_tri_up_avx2(const PointsView& p, std::size_t a, std::size_t b,
                             double A, double B, double C, double eps) {
    const __m256d la = _mm256_set1_pd(-(A - eps));
    const __m256d lb = _mm256_set1_pd(-(B - eps));
    const __m256d lc = _mm256_set1_pd(-(C - eps));
    std::size_t i = 0;
    for (; i + 4 <= p.n; i += 4) {
        __m256d hit = _mm256_cmp_pd(_mm256_loadu_pd(p.u + i), la, _CMP_GT_OQ);
        hit = _mm256_and_pd(hit, _mm256_cmp_pd(_mm256_loadu_pd(p.v + i), lb, _CMP_GT_OQ));
        hit = _mm256_and_pd(hit, _mm256_cmp_pd(_mm256_loadu_pd(p.w + i), lc, _CMP_GT_OQ));
        hit = _mm256_and_pd(hit, skip_mask(i, a, b));
        if (_mm256_movemask_pd(hit)) return true;
    }
    const double sa = -(A - eps), sb = -(B - eps), sc = -(C - eps);
    for (; i < p.n; ++i) {
        if (i == a || i == b) continue;
        if (p.u[i] > sa && p.v[i] > sb && p.w[i] > sc) return true;
    }
    return false;
}

bool any_in_open_square_avx2(const PointsView& p, std::size_t a, std::size_t b,
                             double x0, double y0, double s, double eps) {
    const __m256d xl = _mm256_set1_pd(x0 + eps);
    const __m256d xh = _mm256_set1_pd(x0 + s - eps);
    const __m256d yl = _mm256_set1_pd(y0 + eps);
    const __m256d yh = _mm256_set1_pd(y0 + s - eps);
    std::size_t i = 0;
    for (; i + 4 <= p.n; i += 4) {
        const __m256d px = _mm256_loadu_pd(p.x + i);
        const __m256d py = _mm256_loadu_pd(p.y + i);
        __m256d hit = _mm256_cmp_pd(px, xl, _CMP_GT_OQ);
        hit = _mm256_and_pd(hit, _mm256_cmp_pd(px, xh, _CMP_LT_OQ));
        hit = _mm256_and_pd(hit, _mm256_cmp_pd(py, yl, _CMP_GT_OQ));
        hit = _mm256_and_pd(hit, _mm256_cmp_pd(py, yh, _CMP_LT_OQ));
        hit = _mm256_and_pd(hit, skip_mask(i, a, b));
        if (_mm256_movemask_pd(hit)) return true;
    }
    const double sxl = x0 + eps, sxh = x0 + s - eps, syl = y0 + eps, syh = y0 + s - eps;
    for (; i < p.n; ++i) {
        if (i == a || i == b) continue;
        if (p.x[i] > sxl && p.x[i] < sxh && p.y[i] > syl && p.y[i] < syh) return true;
    }
    return false;
}

int disk_boundary_count_avx2(const PointsView& p, double cx, double cy, double r, double eps) {
    const __m256d vcx = _mm256_set1_pd(cx);
    const __m256d vcy = _mm256_set1_pd(cy);
    const __m256d vr = _mm256_set1_pd(r);
    const __m256d veps = _mm256_set1_pd(eps);
    const __m256d vneps = _mm256_set1_pd(-eps);
    int cnt = 0;
    std::size_t i = 0;
    for (; i + 4 <= p.n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(p.x + i), vcx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(p.y + i), vcy);
        const __m256d d = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
        const __m256d diff = _mm256_sub_pd(d, vr);
        const __m256d on = _mm256_and_pd(_mm256_cmp_pd(diff, veps, _CMP_LE_OQ),
                                         _mm256_cmp_pd(diff, vneps, _CMP_GE_OQ));
        cnt += __builtin_popcount(static_cast<unsigned>(_mm256_movemask_pd(on)));
    }
    for (; i < p.n; ++i) {
        const double dx = p.x[i] - cx;
        const double dy = p.y[i] - cy;
        const double diff = std::sqrt(dx * dx + dy * dy) - r;
        if (diff <= eps && diff >= -eps) ++cnt;
    }
    return cnt;
}

void pair_scales_disk_avx2(const PointsView& p, std::size_t j, double* out) {
    const __m256d px = _mm256_set1_pd(p.x[j]);
    const __m256d py = _mm256_set1_pd(p.y[j]);
    const __m256d half = _mm256_set1_pd(0.5);
    std::size_t i = 0;
    for (; i + 4 <= p.n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(p.x + i), px);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(p.y + i), py);
        const __m256d d = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(half, d));
    }
    for (; i < p.n; ++i) {
        const double dx = p.x[i] - p.x[j];
        const double dy = p.y[i] - p.y[j];
        out[i] = 0.5 * std::sqrt(dx * dx + dy * dy);
    }
}

void pair_scales_tri_down_avx2(const PointsView& p, std::size_t j, double* out) {
    const __m256d uj = _mm256_set1_pd(p.u[j]);
    const __m256d vj = _mm256_set1_pd(p.v[j]);
    const __m256d wj = _mm256_set1_pd(p.w[j]);
    std::size_t i = 0;
    for (; i + 4 <= p.n; i += 4) {
        const __m256d a = _mm256_max_pd(_mm256_loadu_pd(p.u + i), uj);
        const __m256d b = _mm256_max_pd(_mm256_loadu_pd(p.v + i), vj);
        const __m256d c = _mm256_max_pd(_mm256_loadu_pd(p.w + i), wj);
        _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_add_pd(a, b), c));
    }
    for (; i < p.n; ++i) {
        const double a = p.u[i] > p.u[j] ? p.u[i] : p.u[j];
        const double b = p.v[i] > p.v[j] ? p.v[i] : p.v[j];
        const double c = p.w[i] > p.w[j] ? p.w[i] : p.w[j];
        out[i] = a + b + c;
    }
}

void pair_scales_tri_up_avx2(const PointsView& p, std::size_t j, double* out) {
    const __m256d uj = _mm256_set1_pd(p.u[j]);
    const __m256d vj = _mm256_set1_pd(p.v[j]);
    const __m256d wj = _mm256_set1_pd(p.w[j]);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= p.n; i += 4) {
        const __m256d a = _mm256_min_pd(_mm256_loadu_pd(p.u + i), uj);
        const __m256d b = _mm256_min_pd(_mm256_loadu_pd(p.v + i), vj);
        const __m256d c = _mm256_min_pd(_mm256_loadu_pd(p.w + i), wj);
        _mm256_storeu_pd(out + i, _mm256_sub_pd(zero, _mm256_add_pd(_mm256_add_pd(a, b), c)));
    }
    for (; i < p.n; ++i) {
        const double a = p.u[i] < p.u[j] ? p.u[i] : p.u[j];
        const double b = p.v[i] < p.v[j] ? p.v[i] : p.v[j];
        const double c = p.w[i] < p.w[j] ? p.w[i] : p.w[j];
        out[i] = -(a + b + c);
    }
}

void pair_scales_square_avx2(const PointsView& p, std::size_t j, double* out) {
    const __m256d px = _mm256_set1_pd(p.x[j]);
    const __m256d py = _mm256_set1_pd(p.y[j]);
    const __m256d signmask = _mm256_set1_pd(-0.0);
    std::size_t i = 0;
    for (; i + 4 <= p.n; i += 4) {
        const __m256d dx = _mm256_andnot_pd(signmask, _mm256_sub_pd(_mm256_loadu_pd(p.x + i), px));
        const __m256d dy = _mm256_andnot_pd(signmask, _mm256_sub_pd(_mm256_loadu_pd(p.y + i), py));
        _mm256_storeu_pd(out + i, _mm256_max_pd(dx, dy));
    }
    for (; i < p.n; ++i) {
        double dx = p.x[i] - p.x[j];
        double dy = p.y[i] - p.y[j];
        if (dx < 0) dx = -dx;
        if (dy < 0) dy = -dy;
        out[i] = dx > dy ? dx : dy;
    }
}

}  // namespace

const KernelTable* avx2_table() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    static const KernelTable t = {
        any_in_open_disk_avx2,
        any_in_open_tri_down_avx2,
        any_in_open_tri_up_avx2,
        any_in_open_square_avx2,
        disk_boundary_count_avx2,
        pair_scales_disk_avx2,
        pair_scales_tri_down_avx2,
        pair_scales_tri_up_avx2,
        pair_scales_square_avx2,
        "avx2",
    };
    return &t;
}

}  // namespace strongmatch::kernels

#else  // non-x86 fallback

namespace strongmatch::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace strongmatch::kernels

#endif
