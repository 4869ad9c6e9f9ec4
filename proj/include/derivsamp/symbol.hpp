#pragma once

#include "derivsamp/laurent.hpp"
#include "derivsamp/rational.hpp"

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace derivsamp {

/// Configuration (Q_m, a, rho): spline order, shift of the sample set a + rho Z,
/// and the number of derivative channels 0..rho-1.
struct Kappa {
    int m = 3;
    Rational a = 0;
    int rho = 2;

    /// Throws InvalidArgument unless rho >= 1, m > rho and 0 <= a < rho.
    void validate() const;
    [[nodiscard]] std::string to_string() const;
};

struct SymbolMatrix {
    Kappa kappa;
    LaurentMatrix entries;  ///< entries[i][j]: sum_k Q_m^{(i)}(a + rho k - j) z^k

    /// Numeric value at z = e^{2 pi i t}.
    [[nodiscard]] Eigen::MatrixXcd eval_t(double t) const;
};

[[nodiscard]] SymbolMatrix build_symbol(const Kappa& kappa);
[[nodiscard]] LaurentPoly det_symbol(const Kappa& kappa);

/// Value of a symbol entry by direct summation in floating point.
[[nodiscard]] std::complex<double> symbol_entry_direct(const Kappa& kappa, int i, int j, double t);

/// Reduced determinant for rho = 2, a in {0, 1/2}:
///   a = 0:   det = 2^{m-2} / ((m-1)!(m-2)!) z^2 P(z)
///   a = 1/2: det = -6 / ((m-1)!(m-2)! 2^{2m-3}) z P(z)
/// The sign for a = 1/2 keeps P(z) = 3z^2 - 38z + 3 at m = 4.
/// Throws TableMismatch when the division is not exact or not integral.
[[nodiscard]] LaurentPoly table_polynomial(const Kappa& kappa);

struct CisReport {
    Kappa kappa;
    LaurentPoly det;
    CircleCertificate certificate;
    bool is_cis = false;
    bool inconclusive = false;
};

[[nodiscard]] CisReport check_cis(const Kappa& kappa, double tol = 1e-9);

struct ScanRow {
    int m = 0;
    Rational a;
    int rho = 0;
    bool is_cis = false;
    bool predicted = false;
    bool inconclusive = false;
    double root_margin = 0.0;
    [[nodiscard]] bool agrees() const { return is_cis == predicted && !inconclusive; }
};

/// The fractional-part rule for shifts a in {0, 1/2}.
[[nodiscard]] bool assumption1_predicts_cis(int m, const Rational& a, int rho);

/// Rows for 2 <= rho <= rho_max, rho < m <= m_max, a in {0, 1/2}, ordered by (rho, m, a).
[[nodiscard]] std::vector<ScanRow> scan_assumption1(int m_max, int rho_max);

/// Exact determinant of the (m-1)x(m-1) matrix of the (Q_m, 0, m-1) determinant
/// argument equals 1, and its product with the Pascal matrix is unit upper triangular.
[[nodiscard]] bool pascal_det_check(int m);

struct IdentityReport {
    long checked = 0;
    long failures = 0;
    std::string first_failure;
    [[nodiscard]] bool ok() const { return failures == 0; }
};

/// sum_{r=0}^n (-1)^r C(n,r) (t-r)^l: 0 for l < n, n! for l = n.
[[nodiscard]] Rational lemma_power_sum(int n, int l, const Rational& t);
/// sum_{r=0}^n (-1)^r C(n,r) C(k-r, l): 0 for l < n, 1 for l = n (k >= n).
[[nodiscard]] Rational lemma_binomial_sum(int n, int l, int k);
/// sum_j C(j,l) sum_r (-1)^r C(i,r) Q_{m-i}(m-1-j-r), j = 0..m-2: 0 for l < i, 1 for l = i.
[[nodiscard]] Rational lemma_spline_sum(int m, int i, int l);

/// Runs all three identities exactly for n, l, k <= nlk_max and m <= m_max.
[[nodiscard]] IdentityReport identity_lemma_check(int nlk_max = 12, int m_max = 10);

}  // namespace derivsamp
