#include "oddzeta/zeta_coeffs.hpp"

#include <stdexcept>

#include "oddzeta/bernoulli.hpp"

namespace oddzeta::exact {

namespace {

// B_(2k) B_(2S-2k) / ((2k)! (2S-2k)!) with sign (-1)^(k-1), the summand shared
// by the identity coefficient sums (total weight 2S).
Rational signed_pair_term(unsigned long k, unsigned long total_half) {
    const unsigned long a = 2 * k;
    const unsigned long b = 2 * total_half - 2 * k;
    Rational t = bernoulli(a) * bernoulli(b);
    t /= Rational(Integer::factorial(a) * Integer::factorial(b));
    const bool negative = (k % 2 == 0);  // (-1)^(k-1)
    return negative ? -t : t;
}

}  // namespace

Rational euler_zeta_coefficient(unsigned long m) {
    if (m < 1) throw std::domain_error("euler_zeta_coefficient: m must be >= 1");
    Rational c = Rational(Integer::pow2(2 * m)) * bernoulli(2 * m);
    c /= Rational(Integer(2ul) * Integer::factorial(2 * m));
    return (m % 2 == 0) ? -c : c;  // (-1)^(m-1)
}

std::vector<Rational> ramanujan_bernoulli_coeffs(unsigned long m) {
    if (m < 1) throw std::domain_error("ramanujan_bernoulli_coeffs: m must be >= 1");
    const Rational scale(Integer::pow2(2 * m));
    std::vector<Rational> coeffs;
    coeffs.reserve(m + 2);
    for (unsigned long k = 0; k <= m + 1; ++k)
        coeffs.push_back(scale * signed_pair_term(k, m + 1));
    return coeffs;
}

std::vector<Rational> coth_variant_bernoulli_coeffs(unsigned long m) {
    if (m < 1) throw std::domain_error("coth_variant_bernoulli_coeffs: m must be >= 1");
    const Rational scale(Integer::pow2(2 * m + 1));
    std::vector<Rational> coeffs;
    coeffs.reserve(m + 2);
    for (unsigned long k = 0; k <= m + 1; ++k) {
        const unsigned long a = 2 * k;
        const unsigned long b = 2 * m + 2 - 2 * k;
        Rational t = bernoulli(a) * bernoulli(b);
        t /= Rational(Integer::factorial(a) * Integer::factorial(b));
        t *= scale;
        // -2^(2m+1) (-1)^k
        coeffs.push_back(k % 2 == 0 ? -t : t);
    }
    return coeffs;
}

std::vector<Rational> ramanujan_p_form_coeffs(unsigned long m) {
    if (m < 1) throw std::domain_error("ramanujan_p_form_coeffs: m must be >= 1");
    const Rational scale(Integer::pow2(2 * m));
    const bool m_odd = (m % 2 == 1);
    std::vector<Rational> coeffs;
    coeffs.reserve(m + 2);
    for (unsigned long p = 0; p <= m + 1; ++p) {
        const unsigned long a = 2 * m - 2 * p + 2;
        const unsigned long b = 2 * p;
        Rational t = bernoulli(a) * bernoulli(b);
        t /= Rational(Integer::factorial(a) * Integer::factorial(b));
        t *= scale;
        // (-1)^m (-1)^p
        const bool negative = m_odd != (p % 2 == 1);
        coeffs.push_back(negative ? -t : t);
    }
    return coeffs;
}

Rational lerch_rational_coefficient(unsigned long m) {
    // (-1)^(k+1) = (-1)^(k-1), the sign signed_pair_term already carries
    Rational acc(0);
    for (unsigned long k = 0; k <= 2 * m + 2; ++k) acc += signed_pair_term(k, 2 * m + 2);
    return acc * Rational(Integer::pow2(4 * m + 2));
}

bool fold_symmetry_check(unsigned long m) {
    if (m < 1) throw std::domain_error("fold_symmetry_check: m must be >= 1");
    Rational full(0);
    for (unsigned long k = 0; k <= 2 * m; ++k) full += signed_pair_term(k, 2 * m);

    // boundary k in {0, 2m}, centre k = m, and the paired interior
    Rational folded = Rational(-2) * bernoulli(4 * m) / Rational(Integer::factorial(4 * m));
    Rational centre = bernoulli(2 * m) * bernoulli(2 * m);
    centre /= Rational(Integer::factorial(2 * m) * Integer::factorial(2 * m));
    folded += (m % 2 == 0) ? -centre : centre;  // (-1)^(m-1)
    for (unsigned long k = 1; k + 1 <= m; ++k)
        folded += Rational(2) * signed_pair_term(k, 2 * m);

    return full == folded;
}

bool zeta_convolution_rational_check(unsigned long m) {
    if (m < 1) throw std::domain_error("zeta_convolution_rational_check: m must be >= 1");
    // zeta(4m) + (-1)^(m-1) zeta(2m)^2 + 2 sum (-1)^(k-1) zeta(4m-2k) zeta(2k),
    // written as an exact coefficient of pi^(4m)
    Rational lhs = euler_zeta_coefficient(2 * m);
    Rational square = euler_zeta_coefficient(m) * euler_zeta_coefficient(m);
    lhs += (m % 2 == 0) ? -square : square;
    for (unsigned long k = 1; k + 1 <= m; ++k) {
        Rational prod = euler_zeta_coefficient(2 * m - k) * euler_zeta_coefficient(k);
        prod *= Rational(2);
        lhs += (k % 2 == 0) ? -prod : prod;
    }

    Rational rhs(0);
    for (unsigned long k = 0; k <= 2 * m; ++k) rhs += signed_pair_term(k, 2 * m);
    rhs *= Rational(Integer::pow2(4 * m - 2));

    return lhs == rhs;
}

}  // namespace oddzeta::exact
