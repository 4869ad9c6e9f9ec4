#include "derivsamp/sampler.hpp"

#include "derivsamp/bspline.hpp"
#include "derivsamp/error.hpp"
#include "derivsamp/format.hpp"
#include "derivsamp/quadrature.hpp"
#include "derivsamp/simd.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace derivsamp {

SampleGrid grid_covering(const Kappa& kappa, double W, Interval region) {
    kappa.validate();
    if (!(W > 0)) throw InvalidArgument("dilation W must be positive");
    const double a = kappa.a.get_d();
    SampleGrid g{kappa, W, 0, -1};
    g.l_lo = static_cast<long>(std::floor((region.lo * W - a) / kappa.rho));
    g.l_hi = static_cast<long>(std::ceil((region.hi * W - a) / kappa.rho));
    return g;
}

Samples take_samples(const SignalSpec& f, const SampleGrid& grid) {
    const int rho = grid.kappa.rho;
    if (f.max_order() < rho - 1)
        throw InvalidArgument("signal " + f.id() + " lacks derivatives up to order " + std::to_string(rho - 1));
    Samples s{grid.l_lo, grid.l_hi, rho, std::vector<double>(static_cast<size_t>(grid.size() * rho))};
    for (long l = grid.l_lo; l <= grid.l_hi; ++l) {
        const double x = grid.node(l);
        for (int i = 0; i < rho; ++i) s.values[static_cast<size_t>((l - grid.l_lo) * rho + i)] = f.sample(i, x);
    }
    return s;
}

Samples take_samples(const SplineElement& f, const SampleGrid& grid) {
    const int rho = grid.kappa.rho;
    if (rho - 1 > f.m() - 2) throw InvalidArgument("spline derivatives of order rho-1 are not continuous");
    Samples s{grid.l_lo, grid.l_hi, rho, std::vector<double>(static_cast<size_t>(grid.size() * rho))};
    for (long l = grid.l_lo; l <= grid.l_hi; ++l) {
        const double x = grid.node(l);
        for (int i = 0; i < rho; ++i) s.values[static_cast<size_t>((l - grid.l_lo) * rho + i)] = f.eval(i, x);
    }
    return s;
}

double kernel_reach(const KernelTable& table) {
    const Kappa& k = table.kappa();
    return static_cast<double>(k.m + k.rho * table.V() + k.rho - 1);
}

std::pair<long, long> required_l_range(const KernelTable& table, double W, double t) {
    const double R = kernel_reach(table);
    const int rho = table.kappa().rho;
    return {static_cast<long>(std::ceil((W * t - R) / rho)), static_cast<long>(std::floor((W * t + R) / rho))};
}

Reconstruction::Reconstruction(const Samples& samples, const KernelTable& table, double W)
    : table_(&table), W_(W), l_lo_(samples.l_lo), l_hi_(samples.l_hi) {
    const Kappa& k = table.kappa();
    if (samples.rho != k.rho) throw InvalidArgument("sample channels do not match the kernel");
    if (!(W > 0)) throw InvalidArgument("dilation W must be positive");
    const long n_l = samples.l_hi - samples.l_lo + 1;
    if (n_l <= 0) throw InvalidArgument("empty sample window");
    const long dlen = static_cast<long>(table.spline_coeffs(0).size());
    const long k_start = k.rho * samples.l_lo + table.k_first();
    std::vector<double> e(static_cast<size_t>(k.rho * (n_l - 1) + dlen), 0.0);
    for (int i = 0; i < k.rho; ++i) {
        const auto& d = table.spline_coeffs(i);
        const double scale = std::pow(W, -i);
        for (long l = samples.l_lo; l <= samples.l_hi; ++l) {
            const double s = scale * samples.at(l, i);
            if (s == 0.0) continue;
            double* dst = e.data() + k.rho * (l - samples.l_lo);
            for (long q = 0; q < dlen; ++q) dst[q] += s * d[static_cast<size_t>(q)];
        }
    }
    spline_ = PiecewisePoly::from_bspline(k.m, k_start, e);
    const double R = kernel_reach(table);
    valid_ = {(k.rho * static_cast<double>(l_lo_) + R) / W, (k.rho * static_cast<double>(l_hi_) - R) / W};
}

void Reconstruction::check(double t) const {
    if (t < valid_.lo || t > valid_.hi) {
        auto [lo, hi] = required_l_range(*table_, W_, t);
        throw InsufficientSamples("S_W f at t=" + fmt_double(t) + " needs samples l in [" + std::to_string(lo) + ", " +
                                      std::to_string(hi) + "], have [" + std::to_string(l_lo_) + ", " +
                                      std::to_string(l_hi_) + "]",
                                  lo, hi);
    }
}

double Reconstruction::operator()(double t) const {
    check(t);
    return spline_(W_ * t);
}

void Reconstruction::eval(std::span<const double> t, std::span<double> out) const {
    if (t.empty()) return;
    auto [mn, mx] = std::minmax_element(t.begin(), t.end());
    check(*mn);
    check(*mx);
    spline_.eval(t, out, W_);
}

double apply_sw(const Samples& samples, const KernelTable& table, double W, double t) {
    const Kappa& k = table.kappa();
    if (samples.rho != k.rho) throw InvalidArgument("sample channels do not match the kernel");
    auto [lo, hi] = required_l_range(table, W, t);
    if (lo < samples.l_lo || hi > samples.l_hi)
        throw InsufficientSamples("S_W f at t=" + fmt_double(t) + " needs samples l in [" + std::to_string(lo) + ", " +
                                      std::to_string(hi) + "]",
                                  lo, hi);
    double sum = 0.0;
    for (int i = 0; i < k.rho; ++i) {
        const double scale = std::pow(W, -i);
        for (long l = lo; l <= hi; ++l) sum += scale * samples.at(l, i) * table.theta(i)(W * t - k.rho * static_cast<double>(l));
    }
    return sum;
}

double discrete_norm(const Samples& samples, const SampleGrid& grid, double p) {
    if (!(p >= 1)) throw InvalidArgument("p must be >= 1");
    double sum = 0.0;
    for (double v : samples.values) sum += std::pow(std::abs(v), p);
    return std::pow(sum * grid.kappa.rho / grid.W, 1.0 / p);
}

double lp_error(const Reconstruction& rec, const SignalSpec* f, Interval region, double p) {
    if (!(p >= 1)) throw InvalidArgument("p must be >= 1");
    if (!(region.hi > region.lo)) return 0.0;
    constexpr int nodes = 10;
    static const auto gl = gauss_legendre_unit(nodes);
    const double W = rec.W();
    std::vector<double> cuts;
    for (double k = std::ceil(region.lo * W); k < region.hi * W; k += 1.0) cuts.push_back(k / W);
    if (f)
        for (double b : f->breakpoints())
            if (b > region.lo && b < region.hi) cuts.push_back(b);
    cuts.push_back(region.lo);
    cuts.push_back(region.hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<double> t, w;
    t.reserve(cuts.size() * nodes);
    w.reserve(cuts.size() * nodes);
    for (size_t c = 0; c + 1 < cuts.size(); ++c) {
        const double len = cuts[c + 1] - cuts[c];
        if (len <= 0) continue;
        for (int q = 0; q < nodes; ++q) {
            t.push_back(cuts[c] + len * gl.first[static_cast<size_t>(q)]);
            w.push_back(len * gl.second[static_cast<size_t>(q)]);
        }
    }
    std::vector<double> s(t.size()), g(t.size(), 0.0);
    rec.eval(t, s);
    if (f)
        for (size_t n = 0; n < t.size(); ++n) g[n] = f->value(0, t[n]);
    if (p == 2.0) return std::sqrt(simd::weighted_sq_diff(s, g, w));
    double sum = 0.0;
    for (size_t n = 0; n < t.size(); ++n) sum += w[n] * std::pow(std::abs(s[n] - g[n]), p);
    return std::pow(sum, 1.0 / p);
}

BoundsReport frame_bounds(const Kappa& kappa, int grid_n) {
    if (grid_n < 1024) throw InvalidArgument("frame bounds need grid_n >= 1024");
    const CisReport rep = check_cis(kappa);
    if (!rep.is_cis) throw NotCis(kappa.to_string() + " is not a complete interpolation set");
    const SymbolMatrix sym = build_symbol(kappa);
    BoundsReport b;
    b.grid_n = grid_n;
    b.A_kappa = std::numeric_limits<double>::infinity();
    b.lambda_min_sup = -std::numeric_limits<double>::infinity();
    b.B_kappa = 0.0;
    for (int q = 0; q < grid_n; ++q) {
        const Eigen::MatrixXcd M = sym.eval_t(static_cast<double>(q) / grid_n);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M.adjoint() * M, Eigen::EigenvaluesOnly);
        const auto& ev = es.eigenvalues();
        b.A_kappa = std::min(b.A_kappa, ev.minCoeff());
        b.lambda_min_sup = std::max(b.lambda_min_sup, ev.minCoeff());
        b.B_kappa = std::max(b.B_kappa, ev.maxCoeff());
    }
    b.riesz_lower = riesz_lower_bound(kappa.m);
    b.upper_frame = b.B_kappa / b.riesz_lower;
    return b;
}

double sampling_energy_ratio(const Kappa& kappa, const SplineElement& f) {
    kappa.validate();
    const Interval s = f.support();
    const double a = kappa.a.get_d();
    const long lo = static_cast<long>(std::floor((s.lo - a) / kappa.rho));
    const long hi = static_cast<long>(std::ceil((s.hi - a) / kappa.rho));
    double energy = 0.0;
    for (long l = lo; l <= hi; ++l)
        for (int i = 0; i < kappa.rho; ++i) {
            const double v = f.eval(i, a + kappa.rho * static_cast<double>(l));
            energy += v * v;
        }
    return energy / f.l2_norm_sq();
}

InequalityReport verify_sampling_inequality(const Kappa& kappa, int n_trials, std::uint64_t seed) {
    InequalityReport r;
    r.bounds = frame_bounds(kappa);
    r.trials = n_trials;
    r.min_ratio = std::numeric_limits<double>::infinity();
    r.max_ratio = 0.0;
    for (int n = 0; n < n_trials; ++n) {
        const double ratio = sampling_energy_ratio(kappa, random_spline(kappa.m, 30, seed + static_cast<std::uint64_t>(n)));
        r.min_ratio = std::min(r.min_ratio, ratio);
        r.max_ratio = std::max(r.max_ratio, ratio);
        if (ratio < r.bounds.A_kappa - 1e-9 || ratio > r.bounds.upper_frame + 1e-9) ++r.violations;
    }
    return r;
}

ApproxSetup approx_setup(const KernelTable& table, const SignalSpec& f, double W) {
    const double reach = kernel_reach(table) / W;
    const Interval hint = f.support_hint();
    const Interval region{hint.lo - reach, hint.hi + reach};
    return {grid_covering(table.kappa(), W, {region.lo - reach, region.hi + reach}), region};
}

ProbeReport sw_boundedness_probe(const KernelTable& table, std::span<const double> W_list, const SignalSpec& f,
                                 double p) {
    ProbeReport r;
    for (double W : W_list) {
        const ApproxSetup setup = approx_setup(table, f, W);
        const Samples s = take_samples(f, setup.grid);
        const double denom = discrete_norm(s, setup.grid, p);
        double ratio = 0.0;
        if (denom > 0.0) {
            const Reconstruction rec(s, table, W);
            ratio = lp_error(rec, nullptr, setup.region, p) / denom;
        }
        r.W.push_back(W);
        r.ratios.push_back(ratio);
        r.max_ratio = std::max(r.max_ratio, ratio);
    }
    return r;
}

}  // namespace derivsamp
