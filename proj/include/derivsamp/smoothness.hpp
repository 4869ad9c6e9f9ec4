#pragma once

#include "derivsamp/signals.hpp"

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace derivsamp {

using RealFn = std::function<double(double)>;

/// sum_j (-1)^{r-j} C(r, j) f(t + j h)
[[nodiscard]] double finite_diff(const RealFn& f, int r, double h, double t);

/// Grid lower estimate of sup |Delta_h^r f(t)| over t, t + r h in
/// [x - r delta / 2, x + r delta / 2]. Each breakpoint b adds candidates that
/// put one difference node at b - eps or b + eps.
[[nodiscard]] double local_modulus(const RealFn& f, int r, double x, double delta, int search_n = 128,
                                   std::span<const double> breakpoints = {});

struct TauEstimate {
    int r = 1;
    double p = 2.0;
    double delta = 0.0;
    double value = 0.0;
    int search_n = 0;
    double quad_step = 0.0;
    Interval domain;
};

/// Midpoint-rule L^p norm of x -> omega_r(f; x; delta). A non-positive
/// quad_step selects delta / 8; an empty domain selects the support hint
/// widened by r delta on each side.
[[nodiscard]] TauEstimate tau_modulus(const SignalSpec& f, int r, double delta, double p, Interval domain = {},
                                      double quad_step = 0.0, int search_n = 128);

struct OrderFit {
    double slope = 0.0;
    double r2 = 0.0;
};

/// Least-squares line through (log scale, log value); needs >= 4 positive pairs.
[[nodiscard]] OrderFit fit_order(std::span<const std::pair<double, double>> pairs);

/// tau_r(f; lambda delta) <= 1.05 (2 (lambda + 1))^{r+1} tau_r(f; delta), on a common domain.
[[nodiscard]] bool tau_scaling_check(const SignalSpec& f, int r, double delta, double lambda, double p);

/// ||f^{(i)}||_p over domain by composite Gauss-Legendre split at the breakpoints.
[[nodiscard]] double signal_lp_norm(const SignalSpec& f, int i, Interval domain, double p, double step = 0.01);

}  // namespace derivsamp
