#pragma once

#include "derivsamp/piecewise.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace derivsamp {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// f(t) = sum_k coeffs[k] Q_m(t - k0 - k).
class SplineElement {
public:
    SplineElement(int m, long k0, std::vector<double> coeffs);

    [[nodiscard]] int m() const noexcept { return m_; }
    [[nodiscard]] long k0() const noexcept { return k0_; }
    [[nodiscard]] const std::vector<double>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] Interval support() const;

    /// k-th derivative, k <= m - 1 (piecewise; k = m - 1 is right-continuous).
    [[nodiscard]] double eval(int k, double t) const;
    [[nodiscard]] const PiecewisePoly& pieces(int k) const { return pieces_.at(static_cast<size_t>(k)); }

    /// Exact L2 norm squared by Gauss-Legendre on every knot interval.
    [[nodiscard]] double l2_norm_sq() const;

private:
    int m_;
    long k0_;
    std::vector<double> coeffs_;
    std::vector<PiecewisePoly> pieces_;
};

/// Uniform [-1, 1] coefficients from a seeded 64-bit Mersenne twister.
[[nodiscard]] SplineElement random_spline(int m, int support_len, std::uint64_t seed, long k0 = 0);

/// Expected exponent alpha in tau_r(f^{(i)}; delta)_p = O(delta^alpha), when known.
using TauOrderRule = std::function<std::optional<double>(int i, int r, double p)>;

/// A test signal with analytic derivatives.
class SignalSpec {
public:
    using Eval = std::function<double(int, double)>;

    struct Exception {
        double point;
        int from_order;  ///< derivatives of this order and above are undefined at point
    };

    SignalSpec(std::string id, int max_order, Eval eval, std::vector<Exception> exceptions,
               std::vector<double> breakpoints, Interval support_hint, TauOrderRule tau_orders);

    [[nodiscard]] const std::string& id() const noexcept { return id_; }
    [[nodiscard]] int max_order() const noexcept { return max_order_; }

    /// Total function: at exceptional points the defining formula's branch value is used.
    [[nodiscard]] double value(int i, double t) const;
    [[nodiscard]] double operator()(double t) const { return value(0, t); }

    /// As value(), but throws UndefinedSample at a declared exceptional point.
    [[nodiscard]] double sample(int i, double t) const;

    [[nodiscard]] const std::vector<Exception>& exceptions() const noexcept { return exceptions_; }
    /// Points where some derivative jumps (sup-search candidates).
    [[nodiscard]] const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
    /// Outside this interval the signal is zero or negligible (for decaying signals).
    [[nodiscard]] Interval support_hint() const noexcept { return support_; }
    [[nodiscard]] std::optional<double> expected_tau_order(int i, int r, double p) const;

    /// The signal f^{(i)} with the same metadata shifted by i.
    [[nodiscard]] SignalSpec derivative(int i) const;

private:
    std::string id_;
    int max_order_;
    Eval eval_;
    std::vector<Exception> exceptions_;
    std::vector<double> breakpoints_;
    Interval support_;
    TauOrderRule tau_orders_;
};

/// f1, f2, f3, one, t, t2, t3.
[[nodiscard]] std::vector<SignalSpec> catalog();
[[nodiscard]] SignalSpec catalog_signal(const std::string& id);

[[nodiscard]] SignalSpec spline_signal(const SplineElement& f);

/// Monomial-basis polynomial sum_k c[k] t^k; support hint [-50, 50].
[[nodiscard]] SignalSpec polynomial_signal(std::string id, std::vector<double> c);

/// Columns t, f, f1, ...: derivative i at t is the tabulated value at the
/// nearest tabulated abscissa (no interpolation); zero outside the table.
[[nodiscard]] SignalSpec tabulated_signal(std::istream& csv, std::string id = "csv");

}  // namespace derivsamp
