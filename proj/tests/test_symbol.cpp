#include "derivsamp/error.hpp"
#include "derivsamp/symbol.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace derivsamp;

namespace {

LaurentPoly poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return LaurentPoly(0, v);
}

}  // namespace

TEST_CASE("Kappa validation") {
    CHECK_NOTHROW(Kappa{3, 0, 2}.validate());
    CHECK_THROWS_AS(Kappa({2, 0, 2}).validate(), InvalidArgument);
    CHECK_THROWS_AS(Kappa({4, 2, 2}).validate(), InvalidArgument);
    CHECK_THROWS_AS(Kappa({4, -1, 2}).validate(), InvalidArgument);
    CHECK(Kappa{4, Rational(1, 2), 2}.to_string() == "(Q_4,1/2,2)");
}

TEST_CASE("symbol of (Q_3,0,2)") {
    const auto s = build_symbol({3, 0, 2});
    const auto z = LaurentPoly::monomial(1, 1);
    CHECK(s.entries[0][0] == LaurentPoly::monomial(Rational(1, 2), 1));
    CHECK(s.entries[0][1] == LaurentPoly::monomial(Rational(1, 2), 1));
    CHECK(s.entries[1][0] == LaurentPoly::monomial(-1, 1));
    CHECK(s.entries[1][1] == z);
    CHECK(det_symbol({3, 0, 2}) == LaurentPoly::monomial(1, 2));
}

TEST_CASE("symbol of (Q_4,1/2,2)") {
    const Kappa k{4, Rational(1, 2), 2};
    const auto s = build_symbol(k);
    CHECK(s.entries[0][0] == LaurentPoly(0, {Rational(1, 48), Rational(23, 48)}));
    CHECK(s.entries[0][1] == LaurentPoly(1, {Rational(23, 48), Rational(1, 48)}));
    CHECK(s.entries[1][0] == LaurentPoly(0, {Rational(1, 8), Rational(-5, 8)}));
    CHECK(s.entries[1][1] == LaurentPoly(1, {Rational(5, 8), Rational(-1, 8)}));
    CHECK(det_symbol(k) == LaurentPoly(1, {Rational(-3, 64), Rational(38, 64), Rational(-3, 64)}));
}

TEST_CASE("trigonometric entries match direct summation") {
    for (const Kappa& k : {Kappa{3, 0, 2}, Kappa{4, 0, 3}, Kappa{6, Rational(1, 2), 2}, Kappa{7, Rational(1, 3), 4}}) {
        const auto s = build_symbol(k);
        for (double t : {0.0, 0.13, 0.5, 0.91}) {
            const auto M = s.eval_t(t);
            for (int i = 0; i < k.rho; ++i)
                for (int j = 0; j < k.rho; ++j) CHECK(std::abs(M(i, j) - symbol_entry_direct(k, i, j, t)) < 1e-12);
        }
    }
}

TEST_CASE("determinant is a monomial when rho = m - 1") {
    for (int m = 2; m <= 10; ++m) {
        CAPTURE(m);
        CHECK(det_symbol({m, 0, m - 1}) == LaurentPoly::monomial(1, m - 1));
        CHECK(pascal_det_check(m));
    }
}

TEST_CASE("table polynomials") {
    CHECK(table_polynomial({3, 0, 2}) == poly({1}));
    CHECK(table_polynomial({4, 0, 2}) == poly({1, -1}));
    CHECK(table_polynomial({7, 0, 2}) == poly({1, -154, 666, -154, 1}));
    CHECK(table_polynomial({3, Rational(1, 2), 2}) == poly({1, -1}));
    CHECK(table_polynomial({4, Rational(1, 2), 2}) == poly({3, -38, 3}));
    CHECK_THROWS_AS((void)table_polynomial({4, 0, 3}), InvalidArgument);
}

TEST_CASE("CIS verdicts") {
    CHECK(check_cis({3, 0, 2}).is_cis);
    CHECK(check_cis({4, 0, 3}).is_cis);
    CHECK(check_cis({4, Rational(1, 2), 2}).is_cis);
    CHECK_FALSE(check_cis({4, 0, 2}).is_cis);
    const auto r = check_cis({5, Rational(1, 2), 2});
    CHECK_FALSE(r.is_cis);
    CHECK_FALSE(r.inconclusive);
}

TEST_CASE("Assumption 1 pattern") {
    CHECK(assumption1_predicts_cis(3, 0, 2));
    CHECK_FALSE(assumption1_predicts_cis(3, Rational(1, 2), 2));
    CHECK(assumption1_predicts_cis(4, Rational(1, 2), 2));
    CHECK(assumption1_predicts_cis(4, 0, 3));
    const auto rows = scan_assumption1(8, 3);
    CHECK(rows.size() == 2 * (6 + 5));
    for (const auto& r : rows) {
        CAPTURE(r.m);
        CAPTURE(r.rho);
        CHECK(r.agrees());
    }
    CHECK_THROWS_AS((void)scan_assumption1(13, 2), InvalidArgument);
}

TEST_CASE("lemma identities") {
    CHECK(lemma_power_sum(3, 3, Rational(5, 2)) == 6);
    CHECK(lemma_power_sum(4, 2, Rational(-1)) == 0);
    CHECK(lemma_binomial_sum(2, 2, 5) == 1);
    CHECK(lemma_spline_sum(5, 3, 1) == 0);
    const auto rep = identity_lemma_check();
    CHECK(rep.ok());
    CHECK(rep.checked > 1000);
}
