#include "derivsamp/bspline.hpp"

#include "derivsamp/error.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace derivsamp {

namespace {

void require_order(int m) {
    if (m < 1) throw InvalidArgument("B-spline order must be >= 1, got " + std::to_string(m));
}

void require_deriv(int m, int k) {
    require_order(m);
    if (k < 0 || k > m - 2)
        throw InvalidArgument("derivative order " + std::to_string(k) + " of Q_" + std::to_string(m) +
                              " is not continuous (need k <= m-2)");
}

double binom_d(int n, int k) {
    double out = 1.0;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

double eval_q(int m, double t) {
    require_order(m);
    if (!(t >= 0.0) || t >= m) return 0.0;
    const int n = static_cast<int>(std::floor(t));
    const double u = t - n;
    // arr[q] holds Q_k(u + q) for the current order k
    std::array<double, 64> arr{};
    if (m > static_cast<int>(arr.size())) throw InvalidArgument("B-spline order too large");
    arr[0] = 1.0;
    for (int k = 2; k <= m; ++k) {
        for (int q = k - 1; q >= 0; --q) {
            const double x = u + q;
            const double here = q <= k - 2 ? arr[q] : 0.0;
            const double left = q >= 1 ? arr[q - 1] : 0.0;
            arr[q] = (x * here + (k - x) * left) / (k - 1);
        }
    }
    return arr[n];
}

double eval_q_truncated_power(int m, double t) {
    require_order(m);
    if (!(t >= 0.0) || t >= m) return 0.0;
    if (m == 1) return 1.0;
    long double x = t;
    if (x > m / 2.0L) x = m - x;
    long double sum = 0.0L;
    long double fact = 1.0L;
    for (int i = 2; i < m; ++i) fact *= i;
    for (int j = 0; j <= m && x - j > 0; ++j) {
        long double term = std::pow(x - j, static_cast<long double>(m - 1)) * binom_d(m, j);
        sum += (j % 2 ? -term : term);
    }
    return static_cast<double>(sum / fact);
}

Rational eval_q_exact(int m, const Rational& t) {
    require_order(m);
    if (t < 0 || t >= m) return 0;
    if (m == 1) return 1;
    Rational sum = 0;
    for (int j = 0; j <= m; ++j) {
        Rational x = t - j;
        if (x <= 0) break;
        Rational term = pow(x, static_cast<unsigned>(m - 1)) * binomial(m, j);
        if (j % 2) sum -= term;
        else sum += term;
    }
    return sum / factorial(m - 1);
}

double eval_q_deriv(int m, int k, double t) {
    require_deriv(m, k);
    if (k == 0) return eval_q(m, t);
    double sum = 0.0;
    for (int r = 0; r <= k; ++r) {
        const double v = binom_d(k, r) * eval_q(m - k, t - r);
        sum += (r % 2 ? -v : v);
    }
    return sum;
}

Rational eval_q_deriv(int m, int k, const Rational& t) {
    require_deriv(m, k);
    Rational sum = 0;
    for (int r = 0; r <= k; ++r) {
        Rational v = eval_q_exact(m - k, t - r) * binomial(k, r);
        if (r % 2) sum -= v;
        else sum += v;
    }
    return sum;
}

std::vector<std::vector<Rational>> q_piece_polys(int m, int k) {
    require_order(m);
    if (k < 0 || k > m - 1) throw InvalidArgument("piece derivative order out of range");
    std::vector<std::vector<Rational>> pieces(static_cast<size_t>(m), std::vector<Rational>(static_cast<size_t>(m), 0));
    if (m == 1) {
        pieces[0][0] = 1;
        return pieces;
    }
    const BigInt fact = factorial(m - 1);
    for (int p = 0; p < m; ++p) {
        // Q_m(p + u) = 1/(m-1)! sum_{j<=p} (-1)^j C(m,j) (u + p - j)^{m-1}
        for (int j = 0; j <= p; ++j) {
            const BigInt cj = binomial(m, j);
            for (int d = 0; d <= m - 1; ++d) {
                Rational v = Rational(cj * binomial(m - 1, d)) * pow(Rational(p - j), static_cast<unsigned>(m - 1 - d));
                if (j % 2) pieces[p][d] -= v;
                else pieces[p][d] += v;
            }
        }
        for (auto& c : pieces[p]) c /= fact;
        for (int pass = 0; pass < k; ++pass) {
            for (int d = 0; d + 1 < m; ++d) pieces[p][d] = pieces[p][d + 1] * (d + 1);
            pieces[p][m - 1] = 0;
        }
    }
    return pieces;
}

namespace {

// d^n/dy^n of sin(y)/y.
double sinc_y_deriv(int n, double y) {
    if (std::abs(y) < 0.5) {
        // termwise derivative of sum_k (-1)^k y^{2k} / (2k+1)!
        double sum = 0.0;
        double inv_fact = 1.0;  // 1/(2k+1)!
        for (int k = 0; k < 14; ++k) {
            if (k > 0) inv_fact /= (2.0 * k) * (2.0 * k + 1.0);
            const int e = 2 * k;
            if (e < n) continue;
            double coef = inv_fact;
            for (int i = 0; i < n; ++i) coef *= (e - i);
            const double term = coef * std::pow(y, e - n);
            sum += (k % 2 ? -term : term);
        }
        return sum;
    }
    const double s = std::sin(y), c = std::cos(y);
    switch (n) {
        case 0: return s / y;
        case 1: return (y * c - s) / (y * y);
        case 2: return (-y * y * s - 2.0 * y * c + 2.0 * s) / (y * y * y);
        case 3: return (-y * y * y * c + 3.0 * y * y * s + 6.0 * y * c - 6.0 * s) / (y * y * y * y);
        default: throw InvalidArgument("sinc derivative order > 3");
    }
}

}  // namespace

std::complex<double> fourier_q(int m, double xi) { return fourier_q_deriv(m, 0, xi); }

std::complex<double> fourier_q_deriv(int m, int r, double xi) {
    require_order(m);
    if (r < 0 || r > 3) throw InvalidArgument("fourier_q_deriv supports r <= 3, got " + std::to_string(r));
    using std::numbers::pi;
    const double y = pi * xi;
    // sinc(xi) = sin(pi xi)/(pi xi) and its xi-derivatives
    std::array<double, 4> sg{};
    for (int n = 0; n <= r; ++n) sg[n] = sinc_y_deriv(n, y) * std::pow(pi, n);
    // S = sinc^m and its derivatives
    const double md = m;
    auto pw = [&](int e) { return e < 0 ? 0.0 : std::pow(sg[0], e); };
    std::array<double, 4> S{};
    S[0] = pw(m);
    if (r >= 1) S[1] = md * pw(m - 1) * sg[1];
    if (r >= 2) S[2] = md * (md - 1) * pw(m - 2) * sg[1] * sg[1] + md * pw(m - 1) * sg[2];
    if (r >= 3)
        S[3] = md * (md - 1) * (md - 2) * pw(m - 3) * sg[1] * sg[1] * sg[1] +
               3.0 * md * (md - 1) * pw(m - 2) * sg[1] * sg[2] + md * pw(m - 1) * sg[3];
    // F = E S with E = exp(-i pi m xi), E' = b E, b = -i pi m
    const std::complex<double> b(0.0, -pi * md);
    const std::complex<double> E = std::polar(1.0, -pi * md * xi);
    std::complex<double> inner;
    switch (r) {
        case 0: inner = S[0]; break;
        case 1: inner = S[1] + b * S[0]; break;
        case 2: inner = S[2] + 2.0 * b * S[1] + b * b * S[0]; break;
        default: inner = S[3] + 3.0 * b * S[2] + 3.0 * b * b * S[1] + b * b * b * S[0]; break;
    }
    return E * inner;
}

namespace {

// Cohen-Rodriguez Villegas-Zagier acceleration of sum_{k>=0} (-1)^k a(k).
// Error is below 2 a(0) / (3 + sqrt 8)^n for totally monotone a.
template <class F>
double alternating_sum(F a, double tol) {
    const double base = 3.0 + std::sqrt(8.0);
    int n = static_cast<int>(std::ceil(std::log(2.0 * std::abs(a(0)) / tol) / std::log(base))) + 2;
    if (n < 4) n = 4;
    if (n > 40) n = 40;
    double d = std::pow(base, n);
    d = (d + 1.0 / d) / 2.0;
    double bb = -1.0, c = -d, s = 0.0;
    for (int k = 0; k < n; ++k) {
        c = bb - c;
        s += c * a(k);
        bb = (static_cast<double>(k + n) * static_cast<double>(k - n)) * bb / ((k + 0.5) * (k + 1.0));
    }
    return s / d;
}

}  // namespace

double krein_favard(int m, double tol) {
    if (m < 0) throw InvalidArgument("Krein-Favard index must be >= 0");
    if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
    using std::numbers::pi;
    const double s = m + 1;
    const double inner_tol = tol * pi / 8.0;
    if (m % 2 == 0) {
        // alternating: sum (-1)^nu / (2 nu + 1)^s
        return 4.0 / pi * alternating_sum([s](int k) { return std::pow(2.0 * k + 1.0, -s); }, inner_tol);
    }
    // positive: sum (2 nu + 1)^{-s} = (1 - 2^{-s}) / (1 - 2^{1-s}) * eta(s)
    const double factor = (1.0 - std::pow(2.0, -s)) / (1.0 - std::pow(2.0, 1.0 - s));
    const double eta = alternating_sum([s](int k) { return std::pow(k + 1.0, -s); }, inner_tol / factor);
    return 4.0 / pi * factor * eta;
}

double krein_favard_direct(int m, double tol) {
    if (m < 0) throw InvalidArgument("Krein-Favard index must be >= 0");
    using std::numbers::pi;
    const double s = m + 1;
    const long cap = 50'000'000;
    double sum = 0.0;
    for (long nu = 0; nu < cap; ++nu) {
        const double term = std::pow(2.0 * nu + 1.0, -s);
        if (m % 2 == 0) {
            // first omitted term bounds an alternating tail
            if (4.0 / pi * term < tol) return 4.0 / pi * sum;
            sum += (nu % 2 ? -term : term);
        } else {
            sum += term;
            // sum_{mu > nu} (2 mu + 1)^{-s} <= int_nu^inf (2x + 1)^{-s} dx
            const double tail = std::pow(2.0 * nu + 1.0, 1.0 - s) / (2.0 * (s - 1.0));
            if (4.0 / pi * tail < tol) return 4.0 / pi * sum;
        }
    }
    throw NumericalFailure("Krein-Favard partial sums did not reach tolerance for m=" + std::to_string(m));
}

double riesz_lower_bound(int m) {
    require_order(m);
    using std::numbers::pi;
    const int e = 2 * m - 1;
    return std::pow(2.0 / pi, e) * krein_favard(e);
}

}  // namespace derivsamp
