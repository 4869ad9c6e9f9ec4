#include "derivsamp/error.hpp"
#include "derivsamp/rational.hpp"

#include <doctest.h>

using namespace derivsamp;

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("4") == Rational(4));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-1.5") == Rational(-3, 2));
    CHECK(to_string(parse_rational("2/4")) == "1/2");
    CHECK(to_string(parse_rational("0")) == "0");
}

TEST_CASE("parse_rational rejects garbage") {
    CHECK_THROWS_AS((void)parse_rational(""), InvalidArgument);
    CHECK_THROWS_AS((void)parse_rational("1/0"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_rational("abc"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_rational("1/2/3"), InvalidArgument);
}

TEST_CASE("binomial and factorial") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
}
