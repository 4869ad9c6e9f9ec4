#pragma once

#include <span>
#include <vector>

namespace derivsamp {

/// Piecewise polynomial on unit intervals [first + n, first + n + 1), n = 0..pieces-1.
/// Each piece stores `order` coefficients in ascending powers of the local
/// coordinate u = s - (first + n). Zero outside the covered range.
class PiecewisePoly {
public:
    PiecewisePoly() = default;
    PiecewisePoly(int order, long first, std::vector<double> coeffs);

    /// The spline sum_k c[k] Q_m^{(deriv)}(s - k0 - k) written piece by piece.
    static PiecewisePoly from_bspline(int m, long k0, std::span<const double> c, int deriv = 0);

    [[nodiscard]] double operator()(double s) const;

    /// out[n] = P(scale * x[n]); uses the vector kernel when available.
    void eval(std::span<const double> x, std::span<double> out, double scale = 1.0) const;

    [[nodiscard]] PiecewisePoly derivative() const;

    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] long first() const noexcept { return first_; }
    [[nodiscard]] long pieces() const noexcept { return order_ ? static_cast<long>(coeffs_.size()) / order_ : 0; }
    [[nodiscard]] long last() const noexcept { return first_ + pieces(); }
    [[nodiscard]] const std::vector<double>& coeffs() const noexcept { return coeffs_; }

private:
    int order_ = 0;
    long first_ = 0;
    std::vector<double> coeffs_;
};

}  // namespace derivsamp
