#include "derivsamp/smoothness.hpp"

#include "derivsamp/error.hpp"
#include "derivsamp/quadrature.hpp"
#include "derivsamp/simd.hpp"

#include <algorithm>
#include <cmath>

namespace derivsamp {

namespace {

std::vector<double> diff_weights(int r) {
    std::vector<double> w(static_cast<size_t>(r + 1));
    double c = 1.0;
    for (int j = 0; j <= r; ++j) {
        w[static_cast<size_t>(j)] = ((r - j) % 2 ? -c : c);
        c = c * (r - j) / (j + 1);
    }
    return w;
}

}  // namespace

double finite_diff(const RealFn& f, int r, double h, double t) {
    if (r < 1) throw InvalidArgument("difference order must be >= 1");
    const auto w = diff_weights(r);
    double sum = 0.0;
    for (int j = 0; j <= r; ++j) sum += w[static_cast<size_t>(j)] * f(t + j * h);
    return sum;
}

double local_modulus(const RealFn& f, int r, double x, double delta, int search_n, std::span<const double> breakpoints) {
    if (r < 1) throw InvalidArgument("difference order must be >= 1");
    if (delta < 0) throw InvalidArgument("delta must be non-negative");
    if (search_n < 64) throw InvalidArgument("search_n must be >= 64");
    if (delta == 0.0) return 0.0;
    const double lo = x - r * delta / 2.0;
    const double hi = x + r * delta / 2.0;
    const double s = (hi - lo) / search_n;
    std::vector<double> vals(static_cast<size_t>(search_n + 1));
    for (int i = 0; i <= search_n; ++i) vals[static_cast<size_t>(i)] = f(lo + i * s);
    const auto w = diff_weights(r);
    double best = 0.0;
    const int kmax = search_n / r;
    for (int k = 1; k <= kmax; ++k) {
        const size_t count = static_cast<size_t>(search_n - r * k + 1);
        best = std::max(best, simd::max_abs_weighted_diff(vals, w, static_cast<size_t>(k), count));
    }
    for (double b : breakpoints) {
        if (b < lo || b > hi) continue;
        const double eps = 1e-9 * std::max(1.0, std::abs(b));
        for (int k = 1; k <= kmax; ++k) {
            const double h = k * s;
            for (int j = 0; j <= r; ++j) {
                for (double side : {-eps, eps}) {
                    const double t = b + side - j * h;
                    if (t < lo || t + r * h > hi) continue;
                    best = std::max(best, std::abs(finite_diff(f, r, h, t)));
                }
            }
        }
    }
    return best;
}

TauEstimate tau_modulus(const SignalSpec& f, int r, double delta, double p, Interval domain, double quad_step,
                        int search_n) {
    if (!(p >= 1)) throw InvalidArgument("p must be >= 1");
    if (!(delta > 0)) throw InvalidArgument("delta must be positive");
    if (!(domain.hi > domain.lo)) {
        const Interval s = f.support_hint();
        domain = {s.lo - r * delta, s.hi + r * delta};
    }
    if (!(quad_step > 0)) quad_step = delta / 8.0;
    const long n = static_cast<long>(std::ceil((domain.hi - domain.lo) / quad_step));
    const double step = (domain.hi - domain.lo) / static_cast<double>(n);
    const RealFn g = [&f](double t) { return f.value(0, t); };
    double sum = 0.0;
    for (long k = 0; k < n; ++k) {
        const double x = domain.lo + (static_cast<double>(k) + 0.5) * step;
        sum += std::pow(local_modulus(g, r, x, delta, search_n, f.breakpoints()), p);
    }
    return {r, p, delta, std::pow(sum * step, 1.0 / p), search_n, step, domain};
}

OrderFit fit_order(std::span<const std::pair<double, double>> pairs) {
    if (pairs.size() < 4) throw InvalidArgument("order fit needs at least 4 pairs");
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    const double n = static_cast<double>(pairs.size());
    for (const auto& [scale, value] : pairs) {
        if (!(scale > 0) || !(value > 0)) throw InvalidArgument("order fit needs positive scales and values");
        const double x = std::log(scale), y = std::log(value);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    const double vx = sxx - sx * sx / n;
    const double vy = syy - sy * sy / n;
    const double cxy = sxy - sx * sy / n;
    if (vx <= 0) throw InvalidArgument("order fit needs distinct scales");
    OrderFit fit;
    fit.slope = cxy / vx;
    fit.r2 = vy > 0 ? (cxy * cxy) / (vx * vy) : 1.0;
    return fit;
}

bool tau_scaling_check(const SignalSpec& f, int r, double delta, double lambda, double p) {
    if (!(lambda > 0)) throw InvalidArgument("lambda must be positive");
    const Interval s = f.support_hint();
    const double big = std::max(lambda, 1.0) * delta;
    const Interval domain{s.lo - r * big, s.hi + r * big};
    const double lhs = tau_modulus(f, r, lambda * delta, p, domain).value;
    const double rhs = tau_modulus(f, r, delta, p, domain).value;
    return lhs <= 1.05 * std::pow(2.0 * (lambda + 1.0), r + 1) * rhs;
}

double signal_lp_norm(const SignalSpec& f, int i, Interval domain, double p, double step) {
    if (!(p >= 1)) throw InvalidArgument("p must be >= 1");
    static const auto gl = gauss_legendre_unit(10);
    std::vector<double> cuts;
    const long n = static_cast<long>(std::ceil((domain.hi - domain.lo) / step));
    for (long k = 0; k <= n; ++k) cuts.push_back(std::min(domain.hi, domain.lo + static_cast<double>(k) * step));
    for (double b : f.breakpoints())
        if (b > domain.lo && b < domain.hi) cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    double sum = 0.0;
    for (size_t c = 0; c + 1 < cuts.size(); ++c) {
        const double len = cuts[c + 1] - cuts[c];
        for (size_t q = 0; q < gl.first.size(); ++q)
            sum += len * gl.second[q] * std::pow(std::abs(f.value(i, cuts[c] + len * gl.first[q])), p);
    }
    return std::pow(sum, 1.0 / p);
}

}  // namespace derivsamp
