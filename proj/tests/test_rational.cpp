#include <doctest.h>

#include <stdexcept>

#include "oddzeta/rational.hpp"

using oddzeta::exact::Integer;
using oddzeta::exact::Rational;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(-6, -4).to_string() == "3/2");
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK(Rational(0, 5).denominator() == Integer(1ul));
    CHECK(Rational(42, 6).to_string() == "7");
    CHECK(Rational(7).is_integer());
    CHECK_FALSE(Rational(1, 3).is_integer());
}

TEST_CASE("arithmetic is exact and closed") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
    CHECK(Rational(5, 7) / Rational(10, 21) == Rational(3, 2));
    Rational acc(0);
    for (long k = 1; k <= 10; ++k) acc += Rational(1, k) - Rational(1, k + 1);
    CHECK(acc == Rational(10, 11));  // telescoping, exactly
}

TEST_CASE("powers and reciprocals") {
    CHECK(Rational(3, 2).pow(-2) == Rational(4, 9));
    CHECK(Rational(3, 2).pow(0) == Rational(1));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(5, 4).reciprocal() == Rational(4, 5));
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("string parsing accepts p and p/q, rejects everything else") {
    CHECK(Rational::from_string("7") == Rational(7));
    CHECK(Rational::from_string("-22/7") == Rational(-22, 7));
    CHECK(Rational::from_string("+3/6") == Rational(1, 2));
    CHECK(Rational::from_string("0").is_zero());
    CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("2/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("2/-3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1e3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
}

TEST_CASE("ordering and signs") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 3) > Rational(-1, 2));
    CHECK(Rational(5, 10) == Rational(1, 2));
    CHECK(Rational(-3, 7).sign() == -1);
    CHECK(Rational(-3, 7).abs() == Rational(3, 7));
}

TEST_CASE("repeated computation is bit-identical") {
    auto compute = [] {
        Rational r(0);
        for (long k = 1; k <= 30; ++k) r += Rational(1, k * k);
        return r.to_string();
    };
    CHECK(compute() == compute());
}

TEST_CASE("integer helpers") {
    CHECK(Integer::factorial(0) == Integer(1ul));
    CHECK(Integer::factorial(5) == Integer(120ul));
    CHECK(Integer::factorial(12).to_string() == "479001600");
    CHECK(Integer::binomial(10, 3) == Integer(120ul));
    CHECK(Integer::binomial(10, 0) == Integer(1ul));
    CHECK(Integer::pow2(10) == Integer(1024ul));
    CHECK((Integer(7l) * Integer(-3l)).to_string() == "-21");
    CHECK((-Integer(5l)).sign() == -1);
}
