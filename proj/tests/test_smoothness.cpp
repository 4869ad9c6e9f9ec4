#include "derivsamp/error.hpp"
#include "derivsamp/sampler.hpp"
#include "derivsamp/smoothness.hpp"

#include <doctest.h>

#include <cmath>
#include <utility>
#include <vector>

using namespace derivsamp;

TEST_CASE("finite differences") {
    const RealFn cube = [](double t) { return t * t * t; };
    CHECK(finite_diff(cube, 3, 0.5, 1.0) == doctest::Approx(6 * 0.125));
    CHECK(finite_diff(cube, 4, 0.5, 1.0) == doctest::Approx(0.0).scale(1.0));
    CHECK(finite_diff(cube, 1, 1.0, 1.0) == doctest::Approx(7.0));
    CHECK_THROWS_AS((void)finite_diff(cube, 0, 1.0, 0.0), InvalidArgument);
}

TEST_CASE("local modulus") {
    const RealFn line = [](double t) { return 3 * t; };
    // sup over |h| <= delta of |3h|
    CHECK(local_modulus(line, 1, 0.0, 0.2) == doctest::Approx(0.6));
    CHECK(local_modulus(line, 2, 0.0, 0.2) == doctest::Approx(0.0).scale(1.0));
    const RealFn step = [](double t) { return t < 0.3 ? 0.0 : 1.0; };
    const double b[] = {0.3};
    CHECK(local_modulus(step, 1, 0.3, 0.01, 128, b) == 1.0);
    CHECK(local_modulus(step, 1, 0.0, 0.01, 128, b) == 0.0);
    CHECK_THROWS_AS((void)local_modulus(line, 1, 0.0, 0.1, 10), InvalidArgument);
}

TEST_CASE("order fit") {
    std::vector<std::pair<double, double>> pts;
    for (double d : {0.2, 0.1, 0.05, 0.025}) pts.emplace_back(d, 3 * std::pow(d, 1.5));
    const OrderFit f = fit_order(pts);
    CHECK(f.slope == doctest::Approx(1.5));
    CHECK(f.r2 == doctest::Approx(1.0));
    pts.pop_back();
    CHECK_THROWS_AS((void)fit_order(pts), InvalidArgument);
}

TEST_CASE("tau modulus of a jump scales like delta^{1/p}") {
    const SignalSpec f3 = catalog_signal("f3");
    const double a = tau_modulus(f3, 1, 0.1, 2.0).value;
    const double b = tau_modulus(f3, 1, 0.025, 2.0).value;
    CHECK(std::log(a / b) / std::log(4.0) == doctest::Approx(0.5).epsilon(0.1));
    const TauEstimate e = tau_modulus(f3, 1, 0.1, 1.0);
    CHECK(e.quad_step <= 0.1 / 8 + 1e-15);
    CHECK(e.domain.lo <= -1.6);
}

TEST_CASE("scaling inequality of the tau modulus") {
    for (const char* id : {"f1", "f2", "f3"})
        for (double lambda : {0.5, 2.0, 3.0}) CHECK(tau_scaling_check(catalog_signal(id), 2, 0.05, lambda, 2.0));
}

TEST_CASE("discrete norm is bounded by Sobolev-type norms") {
    // ||f||_{l^p_rho} <= sum_{i<rho} (||f^(i)||_p + (rho / W) ||f^(i+1)||_p)
    const Kappa k{4, Rational(1, 2), 2};
    for (const char* id : {"f1", "f2"}) {
        const SignalSpec f = catalog_signal(id);
        for (double W : {1.0, 2.5, 7.0}) {
            const Interval dom{-20.0, 20.0};
            const SampleGrid g = grid_covering(k, W, dom);
            const double lhs = discrete_norm(take_samples(f, g), g, 2.0);
            double rhs = 0.0;
            for (int i = 0; i < k.rho; ++i)
                rhs += signal_lp_norm(f, i, dom, 2.0) + (k.rho / W) * signal_lp_norm(f, i + 1, dom, 2.0);
            CAPTURE(id);
            CAPTURE(W);
            CHECK(lhs <= rhs);
        }
    }
}
