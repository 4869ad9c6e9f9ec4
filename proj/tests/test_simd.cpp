#include "derivsamp/piecewise.hpp"
#include "derivsamp/simd.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace derivsamp;
using simd::Isa;

namespace {

std::vector<double> random_vec(size_t n, std::uint64_t seed, double lo = -1.0, double hi = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return v;
}

}  // namespace

TEST_CASE("dispatch reports a usable ISA") {
    CHECK(simd::isa_available(Isa::scalar));
    CHECK(simd::isa_available(simd::active_isa()));
    CHECK(simd::isa_name(Isa::scalar) == "scalar");
    {
        simd::ScopedIsa guard(Isa::scalar);
        CHECK(simd::active_isa() == Isa::scalar);
    }
}

TEST_CASE("eval_pieces: AVX2 matches scalar bit for bit") {
    if (!simd::isa_available(Isa::avx2)) return;
    for (int m : {2, 3, 4, 7}) {
        const PiecewisePoly p = PiecewisePoly::from_bspline(m, -5, random_vec(13, static_cast<std::uint64_t>(m)), 0);
        const simd::PieceTable t{p.coeffs().data(), p.order(), p.first(), p.pieces()};
        for (size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 1000u}) {
            const auto x = random_vec(n, n + 100, -8.0, 14.0);
            std::vector<double> a(n), b(n);
            {
                simd::ScopedIsa g(Isa::scalar);
                simd::eval_pieces(t, x, a, 1.3);
            }
            {
                simd::ScopedIsa g(Isa::avx2);
                simd::eval_pieces(t, x, b, 1.3);
            }
            for (size_t i = 0; i < n; ++i) REQUIRE(a[i] == b[i]);
        }
    }
}

TEST_CASE("max_abs_weighted_diff: AVX2 matches scalar bit for bit") {
    if (!simd::isa_available(Isa::avx2)) return;
    const auto f = random_vec(301, 3);
    for (size_t r = 1; r <= 4; ++r) {
        const auto w = random_vec(r + 1, 50 + r);
        for (size_t stride = 1; stride <= 7; ++stride) {
            const size_t count = 301 - r * stride;
            double a, b;
            {
                simd::ScopedIsa g(Isa::scalar);
                a = simd::max_abs_weighted_diff(f, w, stride, count);
            }
            {
                simd::ScopedIsa g(Isa::avx2);
                b = simd::max_abs_weighted_diff(f, w, stride, count);
            }
            CHECK(a == b);
        }
    }
}

TEST_CASE("weighted_sq_diff: AVX2 agrees with scalar to rounding") {
    if (!simd::isa_available(Isa::avx2)) return;
    for (size_t n : {0u, 1u, 7u, 8u, 9u, 4097u}) {
        const auto x = random_vec(n, 1), y = random_vec(n, 2), w = random_vec(n, 3, 0.0, 1.0);
        double a, b;
        {
            simd::ScopedIsa g(Isa::scalar);
            a = simd::weighted_sq_diff(x, y, w);
        }
        {
            simd::ScopedIsa g(Isa::avx2);
            b = simd::weighted_sq_diff(x, y, w);
        }
        CHECK(std::abs(a - b) <= 1e-14 * std::max(1.0, a));
    }
}

TEST_CASE("kernels reject inconsistent sizes") {
    std::vector<double> a(4), b(5), w(4);
    CHECK_THROWS((void)simd::weighted_sq_diff(a, b, w));
    std::vector<double> f(10), ww(3);
    CHECK_THROWS((void)simd::max_abs_weighted_diff(f, ww, 5, 2));
}
