#include <doctest.h>

#include <stdexcept>

#include "oddzeta/bernoulli.hpp"
#include "oddzeta/zeta_coeffs.hpp"
#include "oracles.hpp"

using namespace oddzeta::exact;

TEST_CASE("Euler even-zeta coefficients") {
    CHECK(euler_zeta_coefficient(1) == Rational(1, 6));     // zeta(2) = pi^2/6
    CHECK(euler_zeta_coefficient(2) == Rational(1, 90));    // zeta(4) = pi^4/90
    CHECK(euler_zeta_coefficient(3) == Rational(1, 945));   // zeta(6) = pi^6/945
    CHECK(euler_zeta_coefficient(4) == Rational(1, 9450));
    CHECK_THROWS_AS(euler_zeta_coefficient(0), std::domain_error);
    // positive for every m (zeta(2m) > 0)
    for (unsigned long m = 1; m <= 30; ++m) CHECK(euler_zeta_coefficient(m).sign() == 1);
}

TEST_CASE("Ramanujan RHS coefficients") {
    auto c1 = ramanujan_bernoulli_coeffs(1);
    REQUIRE(c1.size() == 3);
    CHECK(c1[0] == Rational(1, 180));
    CHECK(c1[1] == Rational(1, 36));
    CHECK(c1[2] == Rational(1, 180));
    CHECK_THROWS_AS(ramanujan_bernoulli_coeffs(0), std::domain_error);

    // with alpha = beta all powers collapse, and the coefficient sum vanishes
    // exactly for even m
    for (unsigned long m = 2; m <= 24; m += 2) {
        Rational sum(0);
        for (const Rational& c : ramanujan_bernoulli_coeffs(m)) sum += c;
        CHECK_MESSAGE(sum.is_zero(), "collapsed sum nonzero at m=", m);
    }
    // ... and does not vanish for odd m (zeta(2m+1) would be trivial otherwise)
    for (unsigned long m = 1; m <= 23; m += 2) {
        Rational sum(0);
        for (const Rational& c : ramanujan_bernoulli_coeffs(m)) sum += c;
        CHECK_FALSE(sum.is_zero());
    }
}

TEST_CASE("coth-variant coefficients are exactly twice the base ones") {
    for (unsigned long m = 1; m <= 10; ++m) {
        auto rc = ramanujan_bernoulli_coeffs(m);
        auto cc = coth_variant_bernoulli_coeffs(m);
        REQUIRE(cc.size() == rc.size());
        for (size_t k = 0; k < rc.size(); ++k) CHECK(cc[k] == rc[k] + rc[k]);
    }
}

TEST_CASE("p-indexed coefficients match the k-indexed ones under p -> m-p+1") {
    for (unsigned long m = 1; m <= 10; ++m) {
        auto kc = ramanujan_bernoulli_coeffs(m);
        auto pc = ramanujan_p_form_coeffs(m);
        REQUIRE(pc.size() == kc.size());
        for (unsigned long p = 0; p <= m + 1; ++p) CHECK(pc[p] == kc[m + 1 - p]);
    }
}

TEST_CASE("Lerch coefficients") {
    CHECK(lerch_rational_coefficient(0) == Rational(7, 180));
    CHECK(lerch_rational_coefficient(1) == Rational(19, 56700));
    CHECK(lerch_rational_coefficient(2) == Rational(1453, 425675250));
    for (unsigned long m = 0; m <= 8; ++m)
        CHECK(lerch_rational_coefficient(m).sign() == 1);
}

TEST_CASE("Lerch coefficient against an oracle-built expansion") {
    // same sum rebuilt from the tangent-number Bernoulli oracle
    oracles::TangentBernoulli oracle(40);
    for (unsigned long m = 0; m <= 8; ++m) {
        Rational acc(0);
        for (unsigned long k = 0; k <= 2 * m + 2; ++k) {
            Rational term = oracle.get(2 * k) * oracle.get(4 * m + 4 - 2 * k);
            term /= Rational(Integer::factorial(2 * k) * Integer::factorial(4 * m + 4 - 2 * k));
            acc += (k % 2 == 0) ? -term : term;  // (-1)^(k+1)
        }
        acc *= Rational(Integer::pow2(4 * m + 2));
        CHECK(lerch_rational_coefficient(m) == acc);
    }
}

TEST_CASE("fold symmetry holds exactly") {
    for (unsigned long m = 1; m <= 20; ++m)
        CHECK_MESSAGE(fold_symmetry_check(m), "fold failed at m=", m);
    CHECK_THROWS_AS(fold_symmetry_check(0), std::domain_error);
}

TEST_CASE("even-zeta convolution matches its Bernoulli form exactly") {
    for (unsigned long m = 1; m <= 10; ++m)
        CHECK_MESSAGE(zeta_convolution_rational_check(m), "convolution failed at m=", m);
    CHECK_THROWS_AS(zeta_convolution_rational_check(0), std::domain_error);
}
