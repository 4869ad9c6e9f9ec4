#include "derivsamp/piecewise.hpp"

#include "derivsamp/bspline.hpp"
#include "derivsamp/error.hpp"
#include "derivsamp/simd.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace derivsamp {

namespace {

// Double-precision local pieces of Q_m^{(k)}, computed exactly once per (m, k).
const std::vector<double>& piece_table(int m, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<double>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find({m, k});
    if (it != cache.end()) return it->second;
    std::vector<double> flat;
    flat.reserve(static_cast<size_t>(m) * m);
    for (const auto& piece : q_piece_polys(m, k))
        for (const auto& c : piece) flat.push_back(c.get_d());
    return cache.emplace(std::make_pair(m, k), std::move(flat)).first->second;
}

}  // namespace

PiecewisePoly::PiecewisePoly(int order, long first, std::vector<double> coeffs)
    : order_(order), first_(first), coeffs_(std::move(coeffs)) {
    if (order_ < 1 || coeffs_.size() % static_cast<size_t>(order_) != 0)
        throw InvalidArgument("piecewise polynomial storage does not match its order");
}

PiecewisePoly PiecewisePoly::from_bspline(int m, long k0, std::span<const double> c, int deriv) {
    if (m < 1) throw InvalidArgument("B-spline order must be >= 1");
    if (deriv < 0 || deriv > m - 1) throw InvalidArgument("derivative order out of range");
    const auto& table = piece_table(m, deriv);
    const long len = static_cast<long>(c.size());
    const long pieces = len == 0 ? 0 : len + m - 1;
    std::vector<double> out(static_cast<size_t>(pieces) * m, 0.0);
    for (long k = 0; k < len; ++k) {
        if (c[k] == 0.0) continue;
        for (int p = 0; p < m; ++p) {
            double* dst = out.data() + (k + p) * m;
            const double* src = table.data() + static_cast<size_t>(p) * m;
            for (int d = 0; d < m; ++d) dst[d] += c[k] * src[d];
        }
    }
    return PiecewisePoly(m, k0, std::move(out));
}

double PiecewisePoly::operator()(double s) const {
    if (!(s >= static_cast<double>(first_)) || s >= static_cast<double>(last())) return 0.0;
    const double fl = std::floor(s);
    const long n = static_cast<long>(fl) - first_;
    const double u = s - fl;
    const double* c = coeffs_.data() + n * order_;
    double acc = c[order_ - 1];
    for (int d = order_ - 2; d >= 0; --d) acc = acc * u + c[d];
    return acc;
}

void PiecewisePoly::eval(std::span<const double> x, std::span<double> out, double scale) const {
    if (x.size() != out.size()) throw InvalidArgument("eval: input and output sizes differ");
    if (order_ == 0) {
        for (auto& v : out) v = 0.0;
        return;
    }
    simd::eval_pieces({coeffs_.data(), order_, first_, pieces()}, x, out, scale);
}

PiecewisePoly PiecewisePoly::derivative() const {
    if (order_ == 0) return {};
    std::vector<double> out(coeffs_.size(), 0.0);
    const long n = pieces();
    for (long p = 0; p < n; ++p)
        for (int d = 0; d + 1 < order_; ++d) out[p * order_ + d] = coeffs_[p * order_ + d + 1] * (d + 1);
    return PiecewisePoly(order_, first_, std::move(out));
}

}  // namespace derivsamp
