#include "derivsamp/simd.hpp"

#include <cmath>

namespace derivsamp::simd::scalar {

void eval_pieces(const PieceTable& t, std::span<const double> x, std::span<double> out, double scale) {
    const double lo = static_cast<double>(t.first);
    const double hi = static_cast<double>(t.first + t.pieces);
    for (std::size_t n = 0; n < x.size(); ++n) {
        const double s = scale * x[n];
        if (!(s >= lo) || !(s < hi)) {
            out[n] = 0.0;
            continue;
        }
        const double fl = std::floor(s);
        const double u = s - fl;
        const double* c = t.coeffs + (static_cast<long>(fl) - t.first) * t.order;
        double acc = c[t.order - 1];
        for (int d = t.order - 2; d >= 0; --d) acc = acc * u + c[d];
        out[n] = acc;
    }
}

double max_abs_weighted_diff(std::span<const double> f, std::span<const double> w, std::size_t stride,
                             std::size_t count) {
    double best = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < w.size(); ++j) acc = acc + w[j] * f[i + j * stride];
        best = std::max(best, std::abs(acc));
    }
    return best;
}

double weighted_sq_diff(std::span<const double> a, std::span<const double> b, std::span<const double> w) {
    double sum = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
        const double d = a[n] - b[n];
        sum += w[n] * d * d;
    }
    return sum;
}

}  // namespace derivsamp::simd::scalar
