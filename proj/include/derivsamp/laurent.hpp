#pragma once

#include "derivsamp/rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace derivsamp {

/// Laurent polynomial sum_k c_k z^k with exact rational coefficients, z = e^{2 pi i t}.
/// Stored densely from low_degree upward; the zero polynomial has no coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long low_degree, std::vector<Rational> coeffs);
    /// Constant polynomial.
    LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(const Rational& c, long degree);

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] long low_degree() const noexcept { return low_; }
    [[nodiscard]] long high_degree() const noexcept { return low_ + static_cast<long>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] Rational coeff(long degree) const;

    [[nodiscard]] std::complex<double> eval(std::complex<double> z) const;
    /// Value at z = e^{2 pi i t}.
    [[nodiscard]] std::complex<double> eval_t(double t) const;
    [[nodiscard]] Rational eval_exact(const Rational& z) const;

    /// Multiplies by z^k.
    [[nodiscard]] LaurentPoly shifted(long k) const;

    /// Descending powers, e.g. "3*z^2 - 38*z + 3".
    [[nodiscard]] std::string to_string(const std::string& var = "z") const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

private:
    void normalize();

    long low_ = 0;
    std::vector<Rational> coeffs_;
};

/// Exact quotient a / b; throws TableMismatch if b does not divide a.
[[nodiscard]] LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

/// Cofactor expansion up to 4x4, fraction-free elimination above.
[[nodiscard]] LaurentPoly laurent_det(const LaurentMatrix& matrix);
[[nodiscard]] LaurentPoly laurent_det_cofactor(const LaurentMatrix& matrix);
[[nodiscard]] LaurentPoly laurent_det_bareiss(LaurentMatrix matrix);

enum class CircleVerdict { nonvanishing, vanishing, inconclusive };

[[nodiscard]] const char* to_string(CircleVerdict v);

struct CircleCertificate {
    double min_modulus = 0.0;  ///< min of |p(e^{2 pi i t})| over the 4096-point grid
    double argmin_t = 0.0;
    double root_margin = 0.0;  ///< min | |root| - 1 |; +inf when there are no roots
    CircleVerdict verdict = CircleVerdict::inconclusive;
    std::vector<std::complex<double>> roots;
};

/// Decides whether p has zeros on |z| = 1.
///
/// Exact rational tests at z = 1 and z = -1 run first. Otherwise the roots come
/// from companion-matrix eigenvalues. A root within tol of the circle is
/// confirmed by evaluating p at the projected point; when the root test and
/// the evaluations disagree the verdict is inconclusive.
[[nodiscard]] CircleCertificate roots_unit_circle(const LaurentPoly& p, double tol = 1e-9);

/// Sufficient condition: after stripping the monomial factor, p has 2n+1
/// coefficients and sum_{i != n} |a_i| < |a_n|.
[[nodiscard]] bool dominant_coeff_test(const LaurentPoly& p);

}  // namespace derivsamp
