#pragma once

#include "derivsamp/kernel.hpp"
#include "derivsamp/signals.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace derivsamp {

/// Nodes (a + rho l) / W for l_lo <= l <= l_hi.
struct SampleGrid {
    Kappa kappa;
    double W = 1.0;
    long l_lo = 0;
    long l_hi = -1;

    [[nodiscard]] double node(long l) const { return (kappa.a.get_d() + kappa.rho * static_cast<double>(l)) / W; }
    [[nodiscard]] long size() const { return l_hi >= l_lo ? l_hi - l_lo + 1 : 0; }
};

/// Smallest grid whose nodes cover [lo, hi].
[[nodiscard]] SampleGrid grid_covering(const Kappa& kappa, double W, Interval region);

/// Derivative samples f^{(i)}(x_l), i = 0..rho-1.
struct Samples {
    long l_lo = 0;
    long l_hi = -1;
    int rho = 1;
    std::vector<double> values;  ///< (l - l_lo) * rho + i

    [[nodiscard]] double at(long l, int i) const { return values[static_cast<size_t>((l - l_lo) * rho + i)]; }
};

[[nodiscard]] Samples take_samples(const SignalSpec& f, const SampleGrid& grid);
[[nodiscard]] Samples take_samples(const SplineElement& f, const SampleGrid& grid);

/// Reach R = m + rho V + rho - 1: only l with |W t - rho l| <= R contribute at t.
[[nodiscard]] double kernel_reach(const KernelTable& table);
[[nodiscard]] std::pair<long, long> required_l_range(const KernelTable& table, double W, double t);

/// S_W f assembled once as the spline sum_k e_k Q_m(W t - k), where e is the
/// convolution of the scaled samples with the kernel coefficient sequences.
class Reconstruction {
public:
    Reconstruction(const Samples& samples, const KernelTable& table, double W);

    /// Throws InsufficientSamples outside valid_region().
    [[nodiscard]] double operator()(double t) const;
    void eval(std::span<const double> t, std::span<double> out) const;

    /// Points where every contributing sample is available.
    [[nodiscard]] Interval valid_region() const noexcept { return valid_; }
    [[nodiscard]] double W() const noexcept { return W_; }
    /// The spline in the dilated variable s = W t.
    [[nodiscard]] const PiecewisePoly& spline() const noexcept { return spline_; }

private:
    void check(double t) const;

    const KernelTable* table_;
    double W_;
    long l_lo_, l_hi_;
    Interval valid_;
    PiecewisePoly spline_;
};

/// Single-point S_W f(t) by direct summation over the contributing l.
[[nodiscard]] double apply_sw(const Samples& samples, const KernelTable& table, double W, double t);

/// (sum_l sum_i |f^{(i)}(x_l)|^p rho / W)^{1/p}
[[nodiscard]] double discrete_norm(const Samples& samples, const SampleGrid& grid, double p);

/// ||S_W f - f||_p over region (f may be null for ||S_W f||_p). Gauss-Legendre on
/// every knot interval of the reconstruction, split at the signal's breakpoints.
[[nodiscard]] double lp_error(const Reconstruction& rec, const SignalSpec* f, Interval region, double p);

struct BoundsReport {
    double A_kappa = 0.0;         ///< inf_t lambda_min(Psi* Psi)
    double B_kappa = 0.0;         ///< sup_t lambda_max(Psi* Psi)
    double lambda_min_sup = 0.0;  ///< sup_t lambda_min, for comparison
    double riesz_lower = 0.0;
    double upper_frame = 0.0;     ///< B_kappa / riesz_lower
    int grid_n = 0;
};

[[nodiscard]] BoundsReport frame_bounds(const Kappa& kappa, int grid_n = 1024);

/// sum_{i,l} |f^{(i)}(a + rho l)|^2 / ||f||_2^2
[[nodiscard]] double sampling_energy_ratio(const Kappa& kappa, const SplineElement& f);

struct InequalityReport {
    BoundsReport bounds;
    int trials = 0;
    int violations = 0;
    double min_ratio = 0.0;
    double max_ratio = 0.0;
};

/// Random elements of support length 30, seeds seed, seed + 1, ...
[[nodiscard]] InequalityReport verify_sampling_inequality(const Kappa& kappa, int n_trials, std::uint64_t seed = 1);

struct ProbeReport {
    std::vector<double> W;
    std::vector<double> ratios;  ///< ||S_W f||_p / ||f||_{l^p_rho(W)}; 0 when f vanishes
    double max_ratio = 0.0;
};

[[nodiscard]] ProbeReport sw_boundedness_probe(const KernelTable& table, std::span<const double> W_list,
                                               const SignalSpec& f, double p);

/// Sample window and error region used for approximating f at dilation W.
struct ApproxSetup {
    SampleGrid grid;
    Interval region;
};
[[nodiscard]] ApproxSetup approx_setup(const KernelTable& table, const SignalSpec& f, double W);

}  // namespace derivsamp
