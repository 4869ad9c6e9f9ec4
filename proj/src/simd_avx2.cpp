#include "derivsamp/simd.hpp"

#include <immintrin.h>

#include <cmath>

// Compiled for AVX2 only; callers reach these through the runtime dispatcher.
// FMA is deliberately not enabled so that the piece evaluation and the
// difference kernel round exactly like the scalar versions.
#define DERIVSAMP_AVX2 __attribute__((target("avx2")))

namespace derivsamp::simd::avx2 {

DERIVSAMP_AVX2 void eval_pieces(const PieceTable& t, std::span<const double> x, std::span<double> out,
                                double scale) {
    const std::size_t n = x.size();
    const __m256d vscale = _mm256_set1_pd(scale);
    const __m256d lo = _mm256_set1_pd(static_cast<double>(t.first));
    const __m256d hi = _mm256_set1_pd(static_cast<double>(t.first + t.pieces));
    const __m256d zero = _mm256_setzero_pd();
    const __m128i order = _mm_set1_epi32(t.order);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d s = _mm256_mul_pd(vscale, _mm256_loadu_pd(x.data() + i));
        const __m256d valid = _mm256_and_pd(_mm256_cmp_pd(s, lo, _CMP_GE_OQ), _mm256_cmp_pd(s, hi, _CMP_LT_OQ));
        if (_mm256_movemask_pd(valid) == 0) {
            _mm256_storeu_pd(out.data() + i, zero);
            continue;
        }
        const __m256d fl = _mm256_floor_pd(s);
        const __m256d u = _mm256_sub_pd(s, fl);
        const __m256d piece = _mm256_blendv_pd(zero, _mm256_sub_pd(fl, lo), valid);
        const __m128i base = _mm_mullo_epi32(_mm256_cvttpd_epi32(piece), order);
        __m256d acc = _mm256_mask_i32gather_pd(zero, t.coeffs, _mm_add_epi32(base, _mm_set1_epi32(t.order - 1)),
                                               valid, 8);
        for (int d = t.order - 2; d >= 0; --d) {
            const __m256d c = _mm256_mask_i32gather_pd(zero, t.coeffs, _mm_add_epi32(base, _mm_set1_epi32(d)), valid, 8);
            acc = _mm256_add_pd(_mm256_mul_pd(acc, u), c);
        }
        _mm256_storeu_pd(out.data() + i, _mm256_blendv_pd(zero, acc, valid));
    }
    if (i < n) scalar::eval_pieces(t, x.subspan(i), out.subspan(i), scale);
}

DERIVSAMP_AVX2 double max_abs_weighted_diff(std::span<const double> f, std::span<const double> w,
                                            std::size_t stride, std::size_t count) {
    const __m256d sign = _mm256_set1_pd(-0.0);
    __m256d best = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t j = 0; j < w.size(); ++j)
            acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(w[j]), _mm256_loadu_pd(f.data() + i + j * stride)));
        best = _mm256_max_pd(best, _mm256_andnot_pd(sign, acc));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, best);
    double out = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
    if (i < count) out = std::max(out, scalar::max_abs_weighted_diff(f.subspan(i), w, stride, count - i));
    return out;
}

DERIVSAMP_AVX2 double weighted_sq_diff(std::span<const double> a, std::span<const double> b,
                                       std::span<const double> w) {
    const std::size_t n = a.size();
    __m256d sum = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i));
        sum = _mm256_add_pd(sum, _mm256_mul_pd(_mm256_mul_pd(_mm256_loadu_pd(w.data() + i), d), d));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, sum);
    double out = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    if (i < n) out += scalar::weighted_sq_diff(a.subspan(i), b.subspan(i), w.subspan(i));
    return out;
}

}  // namespace derivsamp::simd::avx2
