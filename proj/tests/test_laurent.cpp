#include "derivsamp/error.hpp"
#include "derivsamp/laurent.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace derivsamp;

namespace {

LaurentPoly poly(long low, std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return LaurentPoly(low, v);
}

LaurentPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(-2, 2), len(1, 4), val(-5, 5);
    std::vector<Rational> c(static_cast<size_t>(len(rng)));
    for (auto& x : c) {
        x = Rational(val(rng), 1 + std::abs(val(rng)));
        x.canonicalize();
    }
    return LaurentPoly(deg(rng), c);
}

}  // namespace

TEST_CASE("normalisation and printing") {
    const LaurentPoly p = poly(-1, {0, 3, -38, 3, 0});
    CHECK(p.low_degree() == 0);
    CHECK(p.high_degree() == 2);
    CHECK(p.to_string() == "3*z^2 - 38*z + 3");
    CHECK(LaurentPoly().is_zero());
    CHECK(poly(0, {0, 0}).is_zero());
    CHECK(p.coeff(7) == 0);
    CHECK(p.shifted(-2).low_degree() == -2);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(5);
    for (int n = 0; n < 200; ++n) {
        const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        const Rational z(2, 3);
        CHECK((a * b).eval_exact(z) == a.eval_exact(z) * b.eval_exact(z));
        if (!b.is_zero()) CHECK(div_exact(a * b, b) == a);
    }
}

TEST_CASE("div_exact rejects a remainder") {
    CHECK_THROWS_AS((void)div_exact(poly(0, {1, 0, 1}), poly(0, {1, 1})), TableMismatch);
    CHECK(div_exact(poly(0, {-1, 0, 1}), poly(0, {-1, 1})) == poly(0, {1, 1}));
}

TEST_CASE("cofactor and Bareiss determinants agree") {
    std::mt19937_64 rng(9);
    for (int size = 1; size <= 4; ++size) {
        for (int n = 0; n < 20; ++n) {
            LaurentMatrix m(static_cast<size_t>(size), std::vector<LaurentPoly>(static_cast<size_t>(size)));
            for (auto& row : m)
                for (auto& e : row) e = random_poly(rng);
            CHECK(laurent_det_cofactor(m) == laurent_det_bareiss(m));
        }
    }
}

TEST_CASE("unit-circle certificate") {
    SUBCASE("root at z = 1 is found exactly") {
        const auto c = roots_unit_circle(poly(0, {9, -827, 827, -9}));
        CHECK(c.verdict == CircleVerdict::vanishing);
    }
    SUBCASE("root at z = -1") {
        CHECK(roots_unit_circle(poly(0, {1, 1})).verdict == CircleVerdict::vanishing);
    }
    SUBCASE("complex roots on the circle") {
        // z^2 + z + 1 vanishes at primitive cube roots of unity.
        const auto c = roots_unit_circle(poly(0, {1, 1, 1}));
        CHECK(c.verdict == CircleVerdict::vanishing);
        CHECK(c.min_modulus < 1e-2);
    }
    SUBCASE("reciprocal pair off the circle") {
        const auto c = roots_unit_circle(poly(0, {3, -38, 3}));
        CHECK(c.verdict == CircleVerdict::nonvanishing);
        CHECK(c.root_margin == doctest::Approx(1 - (19 - 4 * std::sqrt(22.0)) / 3).epsilon(1e-12));
        CHECK(c.min_modulus == doctest::Approx(32.0).epsilon(1e-12));
    }
    SUBCASE("monomial never vanishes") {
        const auto c = roots_unit_circle(LaurentPoly::monomial(Rational(1, 64), 3));
        CHECK(c.verdict == CircleVerdict::nonvanishing);
        CHECK(c.min_modulus == doctest::Approx(1.0 / 64));
    }
}

TEST_CASE("dominant coefficient test") {
    CHECK(dominant_coeff_test(poly(0, {1, -8, 1})));
    CHECK(dominant_coeff_test(poly(0, {1, -154, 666, -154, 1})));
    CHECK_FALSE(dominant_coeff_test(poly(0, {1, -1})));
    CHECK(dominant_coeff_test(poly(0, {1, 3, 1})));
    CHECK_FALSE(dominant_coeff_test(poly(0, {2, 3, 2})));
}
