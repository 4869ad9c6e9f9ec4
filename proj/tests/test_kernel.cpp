#include "derivsamp/bspline.hpp"
#include "derivsamp/error.hpp"
#include "derivsamp/kernel.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace derivsamp;

namespace {

const double kDecay = (19.0 - 4.0 * std::sqrt(22.0)) / 3.0;

// Closed-form inverse coefficients of (Q_4,1/2,2), entry (j, i).
double closed_form(int j, int i, int n) {
    const double r = kDecay;
    const auto p = [r](int e) { return std::pow(r, std::abs(e)); };
    const double c8 = 8 * r / (3 * (1 - r * r));
    const double c4 = 4 * r / (9 * (1 - r * r));
    if (j == 0 && i == 0) return c8 * (5 * p(n + 1) - p(n));
    if (j == 0 && i == 1) return -c4 * (23 * p(n + 1) + p(n));
    if (j == 1 && i == 0) return -c8 * (p(n + 2) - 5 * p(n + 1));
    return c4 * (p(n + 2) + 23 * p(n + 1));
}

}  // namespace

TEST_CASE("inverse symbol of (Q_3,0,2) has one nonzero coefficient") {
    const KernelTable t = inv_symbol_coeffs({3, 0, 2});
    const double want[2][2] = {{1, -0.5}, {1, 0.5}};
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 2; ++i) {
            CHECK(std::abs(t.coeff(j, i, -1) - want[j][i]) < 1e-12);
            for (int v = -5; v <= 5; ++v)
                if (v != -1) CHECK(std::abs(t.coeff(j, i, v)) < 1e-12);
        }
    // Theta_0(t) = Q_3(t + 2) + Q_3(t + 1)
    for (double x : {-1.7, -0.2, 0.4}) {
        CHECK(theta_eval(t, 0, x) == doctest::Approx(eval_q(3, x + 2) + eval_q(3, x + 1)).epsilon(1e-12));
        CHECK(t.theta(0)(x) == doctest::Approx(eval_q(3, x + 2) + eval_q(3, x + 1)).epsilon(1e-12));
    }
}

TEST_CASE("inverse symbol of (Q_4,0,3)") {
    const KernelTable t = inv_symbol_coeffs({4, 0, 3});
    const double want[3][3] = {{1, -1, 1.0 / 3}, {1, 0, -1.0 / 6}, {1, 1, 1.0 / 3}};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) CHECK(std::abs(t.coeff(j, i, -1) - want[j][i]) < 1e-12);
}

TEST_CASE("inverse symbol of (Q_4,1/2,2) matches the closed form") {
    const KernelTable t = inv_symbol_coeffs({4, Rational(1, 2), 2});
    for (int n = -10; n <= 10; ++n)
        for (int j = 0; j < 2; ++j)
            for (int i = 0; i < 2; ++i) {
                CAPTURE(n);
                CHECK(std::abs(t.coeff(j, i, n) - closed_form(j, i, n)) < 1e-10);
            }
    CHECK(t.tail_bound() <= 1e-12);
}

TEST_CASE("non-CIS configurations are rejected") {
    CHECK_THROWS_AS((void)inv_symbol_coeffs({4, 0, 2}), NotCis);
    CHECK_THROWS_AS((void)inv_symbol_coeffs({5, Rational(1, 2), 2}), NotCis);
}

TEST_CASE("kernels interpolate derivative samples") {
    // Theta_i^{(k)}(a + rho l) = delta_{ik} delta_{l0}
    for (const Kappa& k : {Kappa{3, 0, 2}, Kappa{4, 0, 3}, Kappa{4, Rational(1, 2), 2}, Kappa{6, Rational(1, 2), 2}}) {
        const KernelTable t = inv_symbol_coeffs(k);
        for (int i = 0; i < k.rho; ++i)
            for (int d = 0; d < k.rho; ++d) {
                const PiecewisePoly th = t.theta_derivative(i, d);
                for (long l = -4; l <= 4; ++l) {
                    const double x = k.a.get_d() + k.rho * static_cast<double>(l);
                    CHECK(th(x) == doctest::Approx(i == d && l == 0 ? 1.0 : 0.0).epsilon(1e-9).scale(1.0));
                }
            }
    }
}

TEST_CASE("reproducing orders") {
    CHECK(reproducing_order(inv_symbol_coeffs({3, 0, 2})).order == 2);
    CHECK(reproducing_order(inv_symbol_coeffs({4, 0, 3})).order == 3);
    CHECK(reproducing_order(inv_symbol_coeffs({4, Rational(1, 2), 2})).order == 3);
}

TEST_CASE("Fourier transform of the kernels at l / rho") {
    using std::numbers::pi;
    const KernelTable t = inv_symbol_coeffs({3, 0, 2});
    CHECK(std::abs(theta_hat_deriv(t, 0, 0, 0.0) - 2.0) < 1e-12);
    CHECK(std::abs(theta_hat_deriv(t, 1, 1, 0.0) - std::complex<double>(0, -pi)) < 1e-12);
    CHECK(std::abs(theta_hat_deriv(t, 1, 0, 0.5) + fourier_q(3, 0.5)) < 1e-12);
    const KernelTable u = inv_symbol_coeffs({4, 0, 3});
    CHECK(std::abs(theta_hat_deriv(u, 0, 2, 0.0) + 12 * pi * pi) < 1e-10);
    CHECK(std::abs(theta_hat_deriv(u, 1, 1, 0.0) - std::complex<double>(0, -4 * pi)) < 1e-10);
    CHECK(std::abs(theta_hat_deriv(u, 2, 0, 0.0) - 0.5) < 1e-12);
    const KernelTable w = inv_symbol_coeffs({4, Rational(1, 2), 2});
    CHECK(std::abs(theta_hat_deriv(w, 0, 2, 0.0) + 26.0 / 3 * pi * pi) < 1e-9);
    CHECK(std::abs(theta_hat_deriv(w, 0, 3, 0.0) - std::complex<double>(0, 22 * pi * pi * pi)) < 1e-8);
    CHECK(std::abs(theta_hat_deriv(w, 1, 1, 0.0) - std::complex<double>(0, -5.0 / 3 * pi)) < 1e-9);
    for (int n = 0; n <= 2; ++n)
        for (int l = -3; l <= 3; ++l) CHECK(std::abs(moment_check_fourier(t, n, l)) < 1e-9);
}

TEST_CASE("kernel CSV round trip") {
    const KernelTable t = inv_symbol_coeffs({4, Rational(1, 2), 2});
    std::stringstream ss;
    write_kernel_csv(ss, t);
    const KernelTable u = read_kernel_csv(ss);
    CHECK(u.V() == t.V());
    CHECK(u.kappa().a == t.kappa().a);
    for (int v = -t.V(); v <= t.V(); ++v) CHECK(u.coeff(1, 0, v) == t.coeff(1, 0, v));
    std::stringstream bad("not a kernel\n");
    CHECK_THROWS_AS((void)read_kernel_csv(bad), InvalidArgument);
}
