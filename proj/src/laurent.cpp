#include "derivsamp/laurent.hpp"

#include "derivsamp/error.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace derivsamp {

LaurentPoly::LaurentPoly(long low_degree, std::vector<Rational> coeffs) : low_(low_degree), coeffs_(std::move(coeffs)) {
    normalize();
}

LaurentPoly::LaurentPoly(const Rational& c) : low_(0), coeffs_{c} { normalize(); }

LaurentPoly LaurentPoly::monomial(const Rational& c, long degree) { return LaurentPoly(degree, {c}); }

void LaurentPoly::normalize() {
    for (auto& c : coeffs_) c.canonicalize();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    std::size_t end = coeffs_.size();
    while (coeffs_[end - 1] == 0) --end;
    coeffs_.erase(coeffs_.begin() + static_cast<long>(end), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    low_ += static_cast<long>(lead);
}

Rational LaurentPoly::coeff(long degree) const {
    if (is_zero() || degree < low_ || degree > high_degree()) return 0;
    return coeffs_[static_cast<std::size_t>(degree - low_)];
}

std::complex<double> LaurentPoly::eval(std::complex<double> z) const {
    if (is_zero()) return 0.0;
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->get_d();
    return acc * std::pow(z, static_cast<int>(low_));
}

std::complex<double> LaurentPoly::eval_t(double t) const {
    return eval(std::polar(1.0, 2.0 * std::numbers::pi * t));
}

Rational LaurentPoly::eval_exact(const Rational& z) const {
    if (is_zero()) return 0;
    if (z == 0) throw InvalidArgument("Laurent polynomial evaluated at z = 0");
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    if (low_ >= 0) return acc * pow(z, static_cast<unsigned>(low_));
    return acc / pow(z, static_cast<unsigned>(-low_));
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly out = *this;
    if (!out.is_zero()) out.low_ += k;
    return out;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long d = high_degree(); d >= low_; --d) {
        Rational c = coeff(d);
        if (c == 0) continue;
        const bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        if (d == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << var;
        if (d != 1) os << "^" << d;
    }
    return os.str();
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long lo = std::min(a.low_, b.low_);
    const long hi = std::max(a.high_degree(), b.high_degree());
    std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[static_cast<std::size_t>(a.low_ - lo) + i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[static_cast<std::size_t>(b.low_ - lo) + i] += b.coeffs_[i];
    return LaurentPoly(lo, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly out = a;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LaurentPoly(a.low_ + b.low_, std::move(c));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.low_ == b.low_ && a.coeffs_ == b.coeffs_; }

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw InvalidArgument("division by the zero Laurent polynomial");
    if (a.is_zero()) return {};
    // both have nonzero constant terms once the monomials are stripped
    std::vector<Rational> rem = a.coeffs();
    const auto& den = b.coeffs();
    if (rem.size() < den.size()) throw TableMismatch("Laurent division leaves a remainder");
    const std::size_t qlen = rem.size() - den.size() + 1;
    std::vector<Rational> quot(qlen, 0);
    for (std::size_t k = qlen; k-- > 0;) {
        const Rational q = rem[k + den.size() - 1] / den.back();
        quot[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= q * den[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw TableMismatch("Laurent division leaves a remainder");
    return LaurentPoly(a.low_degree() - b.low_degree(), std::move(quot));
}

namespace {

void require_square(const LaurentMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw InvalidArgument("determinant of a non-square matrix");
}

LaurentPoly cofactor_rec(const LaurentMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
    const std::size_t n = m.size();
    if (row == n) return Rational(1);
    LaurentPoly sum;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        if (cols[c]) continue;
        if (!m[row][c].is_zero()) {
            cols[c] = 1;
            LaurentPoly term = m[row][c] * cofactor_rec(m, cols, row + 1);
            cols[c] = 0;
            sum = sign > 0 ? sum + term : sum - term;
        }
        sign = -sign;
    }
    return sum;
}

}  // namespace

LaurentPoly laurent_det_cofactor(const LaurentMatrix& matrix) {
    require_square(matrix);
    if (matrix.empty()) return Rational(1);
    std::vector<std::size_t> cols(matrix.size(), 0);
    return cofactor_rec(matrix, cols, 0);
}

LaurentPoly laurent_det_bareiss(LaurentMatrix m) {
    require_square(m);
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    LaurentPoly prev = Rational(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k].is_zero()) ++swap;
            if (swap == n) return {};
            std::swap(m[k], m[swap]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = div_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = LaurentPoly();
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

LaurentPoly laurent_det(const LaurentMatrix& matrix) {
    return matrix.size() <= 4 ? laurent_det_cofactor(matrix) : laurent_det_bareiss(matrix);
}

const char* to_string(CircleVerdict v) {
    switch (v) {
        case CircleVerdict::nonvanishing: return "nonvanishing";
        case CircleVerdict::vanishing: return "vanishing";
        default: return "inconclusive";
    }
}

CircleCertificate roots_unit_circle(const LaurentPoly& p, double tol) {
    if (p.is_zero()) throw InvalidArgument("roots_unit_circle: zero polynomial");
    if (!(tol > 0)) throw InvalidArgument("roots_unit_circle: tolerance must be positive");
    using std::numbers::pi;
    CircleCertificate cert;
    const LaurentPoly q = p.shifted(-p.low_degree());
    std::vector<double> a;
    double scale = 0.0;
    for (const auto& c : q.coeffs()) {
        a.push_back(c.get_d());
        scale += std::abs(a.back());
    }
    auto value = [&](double t) {
        const std::complex<double> z = std::polar(1.0, 2.0 * pi * t);
        std::complex<double> acc = 0.0;
        for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
        return std::abs(acc);
    };

    constexpr int grid = 4096;
    cert.min_modulus = std::numeric_limits<double>::infinity();
    for (int n = 0; n < grid; ++n) {
        const double t = static_cast<double>(n) / grid;
        const double v = value(t);
        if (v < cert.min_modulus) {
            cert.min_modulus = v;
            cert.argmin_t = t;
        }
    }

    const std::size_t deg = a.size() - 1;
    cert.root_margin = std::numeric_limits<double>::infinity();
    if (deg > 0) {
        Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<long>(deg), static_cast<long>(deg));
        for (std::size_t i = 1; i < deg; ++i) comp(static_cast<long>(i), static_cast<long>(i - 1)) = 1.0;
        for (std::size_t i = 0; i < deg; ++i) comp(static_cast<long>(i), static_cast<long>(deg - 1)) = -a[i] / a[deg];
        Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
        if (solver.info() != Eigen::Success) throw NumericalFailure("companion eigenvalue solver failed");
        for (long i = 0; i < solver.eigenvalues().size(); ++i) cert.roots.push_back(solver.eigenvalues()[i]);
    }

    const bool exact_root = q.eval_exact(1) == 0 || q.eval_exact(-1) == 0;
    bool root_near = false;
    double near_eval = std::numeric_limits<double>::infinity();   // |p| at projections of near roots
    double check_eval = std::numeric_limits<double>::infinity();  // same for roots that are merely close
    for (const auto& r : cert.roots) {
        const double margin = std::abs(std::abs(r) - 1.0);
        cert.root_margin = std::min(cert.root_margin, margin);
        if (margin > 1e-4) continue;
        double t = std::arg(r) / (2.0 * pi);
        if (t < 0) t += 1.0;
        const double v = value(t);
        check_eval = std::min(check_eval, v);
        if (margin <= tol) {
            root_near = true;
            near_eval = std::min(near_eval, v);
        }
    }
    const double small = tol * scale;
    if (exact_root) {
        cert.verdict = CircleVerdict::vanishing;
        cert.root_margin = 0.0;
    } else if (root_near) {
        cert.verdict = near_eval <= small ? CircleVerdict::vanishing : CircleVerdict::inconclusive;
    } else {
        cert.verdict = std::min(cert.min_modulus, check_eval) > small ? CircleVerdict::nonvanishing
                                                                       : CircleVerdict::inconclusive;
    }
    return cert;
}

bool dominant_coeff_test(const LaurentPoly& p) {
    const auto& c = p.coeffs();
    if (c.size() % 2 == 0) return false;
    const std::size_t n = c.size() / 2;
    Rational off = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (i != n) off += abs(c[i]);
    return off < abs(c[n]);
}

}  // namespace derivsamp
