#pragma once

#include "derivsamp/rational.hpp"

#include <complex>
#include <vector>

namespace derivsamp {

/// Cardinal B-spline Q_m with support [0, m].
/// Q_1 is the indicator of [0, 1); all values are right-continuous at the knots.

/// Q_m(t) by the Cox-de Boor recurrence.
[[nodiscard]] double eval_q(int m, double t);

/// Q_m(t) from the truncated-power sum, in extended precision, using the
/// symmetry Q_m(t) = Q_m(m - t) for m >= 2. Slower; kept as a reference.
[[nodiscard]] double eval_q_truncated_power(int m, double t);

[[nodiscard]] Rational eval_q_exact(int m, const Rational& t);

/// k-th derivative written as a difference of lower-order splines. Requires k <= m - 2.
[[nodiscard]] double eval_q_deriv(int m, int k, double t);
[[nodiscard]] Rational eval_q_deriv(int m, int k, const Rational& t);

/// Exact local polynomials: entry [p][d] is the coefficient of u^d in
/// Q_m^{(k)}(p + u) for u in [0, 1), p = 0..m-1.
[[nodiscard]] std::vector<std::vector<Rational>> q_piece_polys(int m, int k = 0);

/// Fourier transform with the exp(-2 pi i xi t) convention.
[[nodiscard]] std::complex<double> fourier_q(int m, double xi);

/// r-th derivative of the Fourier transform; r <= 3.
[[nodiscard]] std::complex<double> fourier_q_deriv(int m, int r, double xi);

/// Krein-Favard constant K_m, accurate to tol.
[[nodiscard]] double krein_favard(int m, double tol = 1e-14);

/// Partial sums of the defining series with the classical truncation bounds.
/// Only practical when the series converges fast (m >= 2).
[[nodiscard]] double krein_favard_direct(int m, double tol);

/// Optimal lower Riesz bound of the integer shifts of Q_m; the upper bound is 1.
[[nodiscard]] double riesz_lower_bound(int m);

}  // namespace derivsamp
