#pragma once

#include "derivsamp/piecewise.hpp"
#include "derivsamp/symbol.hpp"

#include <complex>
#include <iosfwd>
#include <vector>

namespace derivsamp {

/// Fourier coefficients of the inverse symbol, truncated to |v| <= V, and the
/// reconstruction kernels they define:
///   Theta_i(t) = sum_{|v|<=V} sum_j coeff(j, i, v) Q_m(t - rho v - j).
class KernelTable {
public:
    KernelTable(Kappa kappa, int V, double tail_bound, int grid_n, std::vector<std::complex<double>> coeffs);

    [[nodiscard]] const Kappa& kappa() const noexcept { return kappa_; }
    [[nodiscard]] int V() const noexcept { return V_; }
    [[nodiscard]] double tail_bound() const noexcept { return tail_bound_; }
    [[nodiscard]] int grid_n() const noexcept { return grid_n_; }

    /// Zero for |v| > V.
    [[nodiscard]] std::complex<double> coeff(int j, int i, int v) const;

    /// Theta_i as the B-spline series sum_k d_k Q_m(t - k), k from k_first().
    [[nodiscard]] long k_first() const noexcept { return -static_cast<long>(kappa_.rho) * V_; }
    [[nodiscard]] const std::vector<double>& spline_coeffs(int i) const;
    [[nodiscard]] const PiecewisePoly& theta(int i) const;
    [[nodiscard]] PiecewisePoly theta_derivative(int i, int k) const;

    /// Theta_i vanishes outside [support_lo(), support_hi()].
    [[nodiscard]] long support_lo() const noexcept { return k_first(); }
    [[nodiscard]] long support_hi() const noexcept { return static_cast<long>(kappa_.rho) * (V_ + 1) - 1 + kappa_.m; }

private:
    Kappa kappa_;
    int V_;
    double tail_bound_;
    int grid_n_;
    std::vector<std::complex<double>> coeffs_;  // ((j * rho + i) * (2V + 1) + v + V)
    std::vector<std::vector<double>> spline_;
    std::vector<PiecewisePoly> theta_;
};

/// Samples Psi on a uniform grid, inverts, and recovers the coefficients by FFT,
/// doubling the grid until the coefficients near the Nyquist index drop below
/// tol and two refinements agree. Throws NotCis or NumericalFailure.
[[nodiscard]] KernelTable inv_symbol_coeffs(const Kappa& kappa, double tol = 1e-12);

/// Direct double sum; the imaginary part must stay below 1e-10.
[[nodiscard]] double theta_eval(const KernelTable& table, int i, double t);

struct ReproducingReport {
    Kappa kappa;
    int order = -1;
    std::vector<double> residuals;  ///< max residual for degree n = 0..r_max
};

/// Largest r such that the time-domain moment identity holds to tol for all n <= r.
[[nodiscard]] ReproducingReport reproducing_order(const KernelTable& table, int r_max = 6, double tol = 1e-8);

/// Residual of the Fourier-domain moment identity at degree n <= 3 and frequency l / rho.
[[nodiscard]] std::complex<double> moment_check_fourier(const KernelTable& table, int n, int l);

/// Derivative of order k <= 3 of the Fourier transform of Theta_i.
[[nodiscard]] std::complex<double> theta_hat_deriv(const KernelTable& table, int i, int k, double xi);

/// Rows "j,i,v,re,im" preceded by one "# kernel,..." metadata line.
void write_kernel_csv(std::ostream& os, const KernelTable& table);
[[nodiscard]] KernelTable read_kernel_csv(std::istream& is);

}  // namespace derivsamp
