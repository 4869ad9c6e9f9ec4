#include "derivsamp/symbol.hpp"

#include "derivsamp/bspline.hpp"
#include "derivsamp/error.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <sstream>

namespace derivsamp {

void Kappa::validate() const {
    if (rho < 1) throw InvalidArgument("rho must be >= 1");
    if (m <= rho) throw InvalidArgument("need m > rho (got m=" + std::to_string(m) + ", rho=" + std::to_string(rho) + ")");
    if (a < 0 || a >= rho) throw InvalidArgument("shift a must lie in [0, rho), got " + a.get_str());
}

std::string Kappa::to_string() const {
    std::ostringstream os;
    os << "(Q_" << m << "," << a.get_str() << "," << rho << ")";
    return os.str();
}

Eigen::MatrixXcd SymbolMatrix::eval_t(double t) const {
    const long n = kappa.rho;
    Eigen::MatrixXcd out(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) out(i, j) = entries[static_cast<size_t>(i)][static_cast<size_t>(j)].eval_t(t);
    return out;
}

namespace {

// k with a + rho k - j possibly inside [0, m]
std::pair<long, long> k_range(const Kappa& kappa, int j) {
    const double a = kappa.a.get_d();
    const long lo = static_cast<long>(std::floor((j - a) / kappa.rho)) - 1;
    const long hi = static_cast<long>(std::ceil((kappa.m + j - a) / kappa.rho)) + 1;
    return {lo, hi};
}

}  // namespace

SymbolMatrix build_symbol(const Kappa& kappa) {
    kappa.validate();
    SymbolMatrix s{kappa, LaurentMatrix(static_cast<size_t>(kappa.rho), std::vector<LaurentPoly>(static_cast<size_t>(kappa.rho)))};
    for (int i = 0; i < kappa.rho; ++i) {
        for (int j = 0; j < kappa.rho; ++j) {
            auto [lo, hi] = k_range(kappa, j);
            std::vector<Rational> c;
            for (long k = lo; k <= hi; ++k) c.push_back(eval_q_deriv(kappa.m, i, Rational(kappa.a + kappa.rho * k - j)));
            s.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = LaurentPoly(lo, std::move(c));
        }
    }
    return s;
}

LaurentPoly det_symbol(const Kappa& kappa) { return laurent_det(build_symbol(kappa).entries); }

std::complex<double> symbol_entry_direct(const Kappa& kappa, int i, int j, double t) {
    kappa.validate();
    auto [lo, hi] = k_range(kappa, j);
    const double a = kappa.a.get_d();
    std::complex<double> sum = 0.0;
    for (long k = lo; k <= hi; ++k)
        sum += eval_q_deriv(kappa.m, i, a + static_cast<double>(kappa.rho * k - j)) *
               std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) * t);
    return sum;
}

LaurentPoly table_polynomial(const Kappa& kappa) {
    kappa.validate();
    if (kappa.rho != 2 || (kappa.a != 0 && kappa.a != Rational(1, 2)) || kappa.m < 3)
        throw InvalidArgument("table polynomials are defined for rho = 2, a in {0, 1/2}, m >= 3");
    const int m = kappa.m;
    const Rational fact = Rational(factorial(m - 1) * factorial(m - 2));
    Rational pref;
    long shift;
    if (kappa.a == 0) {
        pref = pow(Rational(2), static_cast<unsigned>(m - 2)) / fact;
        shift = 2;
    } else {
        pref = Rational(-6) / (fact * pow(Rational(2), static_cast<unsigned>(2 * m - 3)));
        shift = 1;
    }
    const LaurentPoly q = div_exact(det_symbol(kappa), LaurentPoly::monomial(pref, shift));
    if (q.low_degree() != 0)
        throw TableMismatch("reduced determinant of " + kappa.to_string() + " is not a polynomial with P(0) != 0");
    for (const auto& c : q.coeffs())
        if (c.get_den() != 1) throw TableMismatch("reduced determinant of " + kappa.to_string() + " is not integral");
    return q;
}

CisReport check_cis(const Kappa& kappa, double tol) {
    CisReport r{kappa, det_symbol(kappa), {}, false, false};
    r.certificate = roots_unit_circle(r.det, tol);
    r.is_cis = r.certificate.verdict == CircleVerdict::nonvanishing;
    r.inconclusive = r.certificate.verdict == CircleVerdict::inconclusive;
    return r;
}

bool assumption1_predicts_cis(int m, const Rational& a, int rho) {
    const Rational half(1, 2);
    // <(rho+1)/2> and <rho/2> are 0 or 1/2
    const Rational frac_rho_plus = (rho + 1) % 2 == 0 ? Rational(0) : half;
    const Rational frac_rho = rho % 2 == 0 ? Rational(0) : half;
    return m % 2 == 0 ? a == frac_rho_plus : a == frac_rho;
}

std::vector<ScanRow> scan_assumption1(int m_max, int rho_max) {
    if (m_max > 12 || rho_max > 6 || rho_max < 2 || m_max < 3)
        throw InvalidArgument("scan domain is 2 <= rho <= rho_max <= 6, rho < m <= m_max <= 12");
    std::vector<Kappa> configs;
    for (int rho = 2; rho <= rho_max; ++rho)
        for (int m = rho + 1; m <= m_max; ++m)
            for (const Rational& a : {Rational(0), Rational(1, 2)}) configs.push_back({m, a, rho});
    std::vector<std::future<ScanRow>> jobs;
    jobs.reserve(configs.size());
    for (const auto& k : configs) {
        jobs.push_back(std::async(std::launch::async, [k] {
            const CisReport rep = check_cis(k);
            ScanRow row;
            row.m = k.m;
            row.a = k.a;
            row.rho = k.rho;
            row.is_cis = rep.is_cis;
            row.inconclusive = rep.inconclusive;
            row.predicted = assumption1_predicts_cis(k.m, k.a, k.rho);
            row.root_margin = rep.certificate.root_margin;
            return row;
        }));
    }
    std::vector<ScanRow> rows;
    rows.reserve(jobs.size());
    for (auto& j : jobs) rows.push_back(j.get());
    return rows;
}

bool pascal_det_check(int m) {
    if (m < 2) throw InvalidArgument("pascal_det_check needs m >= 2");
    const int n = m - 1;
    LaurentMatrix A(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
    std::vector<std::vector<Rational>> a(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational v = 0;
            for (int r = 0; r <= i; ++r) {
                Rational q = eval_q_exact(m - i, Rational(m - 1 - j - r)) * binomial(i, r);
                if (r % 2) v -= q;
                else v += q;
            }
            a[i][j] = v;
            A[i][j] = LaurentPoly(v);
        }
    }
    if (laurent_det(A) != LaurentPoly(Rational(1))) return false;
    for (int i = 0; i < n; ++i) {
        for (int l = 0; l <= i; ++l) {
            Rational r = 0;
            for (int j = 0; j < n; ++j) r += a[i][j] * binomial(j, l);
            if (r != (l == i ? 1 : 0)) return false;
        }
    }
    return true;
}

Rational lemma_power_sum(int n, int l, const Rational& t) {
    Rational s = 0;
    for (int r = 0; r <= n; ++r) {
        Rational v = pow(Rational(t - r), static_cast<unsigned>(l)) * binomial(n, r);
        if (r % 2) s -= v;
        else s += v;
    }
    return s;
}

Rational lemma_binomial_sum(int n, int l, int k) {
    Rational s = 0;
    for (int r = 0; r <= n; ++r) {
        Rational v = Rational(binomial(n, r) * binomial(k - r, l));
        if (r % 2) s -= v;
        else s += v;
    }
    return s;
}

Rational lemma_spline_sum(int m, int i, int l) {
    Rational s = 0;
    for (int j = 0; j <= m - 2; ++j) {
        Rational inner = 0;
        for (int r = 0; r <= i; ++r) {
            Rational v = eval_q_exact(m - i, Rational(m - 1 - j - r)) * binomial(i, r);
            if (r % 2) inner -= v;
            else inner += v;
        }
        s += inner * binomial(j, l);
    }
    return s;
}

IdentityReport identity_lemma_check(int nlk_max, int m_max) {
    if (nlk_max > 12 || m_max > 10 || nlk_max < 0 || m_max < 2)
        throw InvalidArgument("identity ranges are n, l, k <= 12 and 2 <= m <= 10");
    IdentityReport rep;
    auto record = [&](bool ok, const std::string& what) {
        ++rep.checked;
        if (!ok) {
            if (rep.failures == 0) rep.first_failure = what;
            ++rep.failures;
        }
    };
    const std::vector<Rational> ts = {Rational(0), Rational(7, 2), Rational(-5, 3), Rational(11), Rational(1, 7)};
    for (int n = 0; n <= nlk_max; ++n) {
        for (int l = 0; l <= n; ++l) {
            for (const auto& t : ts) {
                const Rational want = l == n ? Rational(factorial(n)) : Rational(0);
                record(lemma_power_sum(n, l, t) == want,
                       "power sum n=" + std::to_string(n) + " l=" + std::to_string(l) + " t=" + t.get_str());
            }
            for (int k = n; k <= nlk_max; ++k)
                record(lemma_binomial_sum(n, l, k) == (l == n ? 1 : 0),
                       "binomial sum n=" + std::to_string(n) + " l=" + std::to_string(l) + " k=" + std::to_string(k));
        }
    }
    for (int m = 2; m <= m_max; ++m)
        for (int i = 0; i <= m - 2; ++i)
            for (int l = 0; l <= i; ++l)
                record(lemma_spline_sum(m, i, l) == (l == i ? 1 : 0),
                       "spline sum m=" + std::to_string(m) + " i=" + std::to_string(i) + " l=" + std::to_string(l));
    return rep;
}

}  // namespace derivsamp
