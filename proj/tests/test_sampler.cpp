#include "derivsamp/error.hpp"
#include "derivsamp/sampler.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace derivsamp;

namespace {

double interior_max_error(const KernelTable& table, const SplineElement& f) {
    const Interval s = f.support();
    const SampleGrid grid = grid_covering(table.kappa(), 1.0, {s.lo - 40, s.hi + 40});
    const Reconstruction rec(take_samples(f, grid), table, 1.0);
    const Interval v = rec.valid_region();
    double err = 0.0;
    for (int n = 0; n <= 400; ++n) {
        const double t = s.lo - 3 + (s.hi - s.lo + 6) * n / 400.0;
        REQUIRE(t > v.lo);
        REQUIRE(t < v.hi);
        err = std::max(err, std::abs(rec(t) - f.eval(0, t)));
    }
    return err;
}

}  // namespace

TEST_CASE("sample grids") {
    const Kappa k{4, Rational(1, 2), 2};
    const SampleGrid g = grid_covering(k, 2.0, {-3.0, 5.0});
    CHECK(g.node(g.l_lo) <= -3.0);
    CHECK(g.node(g.l_lo + 1) > -3.0);
    CHECK(g.node(g.l_hi) >= 5.0);
    CHECK(g.node(g.l_hi - 1) < 5.0);
    CHECK(g.node(0) == 0.25);
}

TEST_CASE("elements of V(Q_m) are reconstructed") {
    for (const Kappa& k : {Kappa{3, 0, 2}, Kappa{4, 0, 3}, Kappa{4, Rational(1, 2), 2}}) {
        const KernelTable table = inv_symbol_coeffs(k);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            CAPTURE(seed);
            CHECK(interior_max_error(table, random_spline(k.m, 20, seed, -7)) <= 1e-9);
        }
    }
}

TEST_CASE("spline evaluation of S_W f matches direct summation") {
    const KernelTable table = inv_symbol_coeffs({4, Rational(1, 2), 2});
    const SignalSpec f = catalog_signal("f1");
    const double W = 3.7;
    const ApproxSetup setup = approx_setup(table, f, W);
    const Samples s = take_samples(f, setup.grid);
    const Reconstruction rec(s, table, W);
    for (double t : {-2.2, 0.0, 0.31, 4.9}) CHECK(rec(t) == doctest::Approx(apply_sw(s, table, W, t)).epsilon(1e-12));
    std::vector<double> ts{-1.0, 0.5, 2.0}, out(3);
    rec.eval(ts, out);
    for (size_t n = 0; n < 3; ++n) CHECK(out[n] == rec(ts[n]));
}

TEST_CASE("reconstruction outside the sample window is refused") {
    const KernelTable table = inv_symbol_coeffs({3, 0, 2});
    const SampleGrid grid = grid_covering(table.kappa(), 2.0, {0.0, 10.0});
    const Reconstruction rec(take_samples(catalog_signal("f1"), grid), table, 2.0);
    CHECK_THROWS_AS((void)rec(-5.0), InsufficientSamples);
    CHECK_NOTHROW((void)rec(5.0));
}

TEST_CASE("polynomials are reproduced up to the reproducing order") {
    const KernelTable table = inv_symbol_coeffs({4, 0, 3});
    for (const char* id : {"one", "t", "t2", "t3"}) {
        const SignalSpec p = catalog_signal(id);
        const double W = 2.0;
        const SampleGrid grid = grid_covering(table.kappa(), W, {-20.0, 20.0});
        const Reconstruction rec(take_samples(p, grid), table, W);
        for (double t : {-3.3, 0.1, 2.7}) CHECK(rec(t) == doctest::Approx(p(t)).epsilon(1e-9).scale(1.0));
    }
}

TEST_CASE("frame bounds of the worked examples") {
    const BoundsReport b = frame_bounds({3, 0, 2});
    CHECK(std::abs(b.B_kappa - 2.0) < 1e-12);
    CHECK(std::abs(b.A_kappa - 0.5) < 1e-12);
    CHECK(std::abs(b.upper_frame - 15.0) < 1e-9);
    // Eigenvalues of M^T M for the constant matrix of (Q_4,0,3), computed offline.
    const BoundsReport c = frame_bounds({4, 0, 3});
    CHECK(c.A_kappa == doctest::Approx(0.32382502232009372272).epsilon(1e-12));
    CHECK(c.B_kappa == doctest::Approx(6.1761749776799062773).epsilon(1e-12));
    CHECK_THROWS_AS((void)frame_bounds({4, 0, 2}), NotCis);
    CHECK_THROWS_AS((void)frame_bounds({3, 0, 2}, 100), InvalidArgument);
}

TEST_CASE("sampling inequality on random elements") {
    const InequalityReport r = verify_sampling_inequality({4, Rational(1, 2), 2}, 40, 3);
    CHECK(r.violations == 0);
    CHECK(r.min_ratio >= r.bounds.A_kappa);
    CHECK(r.max_ratio <= r.bounds.upper_frame);
}

TEST_CASE("S_W stays bounded") {
    const KernelTable table = inv_symbol_coeffs({3, 0, 2});
    const double W[] = {2.0, 4.0, 8.0, 16.0};
    const ProbeReport r = sw_boundedness_probe(table, W, catalog_signal("f2"), 2.0);
    CHECK(r.ratios.size() == 4);
    CHECK(r.max_ratio < 10.0);
}

TEST_CASE("undefined sample nodes surface as errors") {
    const KernelTable table = inv_symbol_coeffs({3, 0, 2});
    const SignalSpec f3 = catalog_signal("f3");
    CHECK_THROWS_AS((void)take_samples(f3, approx_setup(table, f3, 4.0).grid), UndefinedSample);
    CHECK_NOTHROW((void)take_samples(f3, approx_setup(table, f3, 3 * std::sqrt(7.0)).grid));
}
