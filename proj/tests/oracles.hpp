// Test-only oracles and helpers, independent of the library's production
// paths: a tangent-number route to Bernoulli numbers, textbook constants,
// and ulp-level comparison for Real values.
#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "oddzeta/rational.hpp"
#include "oddzeta/real.hpp"

namespace oracles {

using oddzeta::exact::Integer;
using oddzeta::exact::Rational;
using oddzeta::series::Real;

// Tangent numbers T_1..T_n by the integer triangle
//   T[k] <- (k-1) T[k-1], then T[j] <- (j-k) T[j-1] + (j-k+2) T[j];
// tan x = sum T_n x^(2n-1)/(2n-1)!. (T = 1, 2, 16, 272, 7936, ...)
inline std::vector<Integer> tangent_numbers(unsigned long n) {
    std::vector<Integer> t(n + 1, Integer(0ul));
    if (n >= 1) t[1] = Integer(1ul);
    for (unsigned long k = 2; k <= n; ++k) t[k] = Integer(k - 1) * t[k - 1];
    for (unsigned long k = 2; k <= n; ++k)
        for (unsigned long j = k; j <= n; ++j)
            t[j] = Integer(j - k) * t[j - 1] + Integer(j - k + 2) * t[j];
    return t;
}

// Second-method Bernoulli oracle:
//   B_(2n) = (-1)^(n-1) * 2n * T_n / (2^(2n) (2^(2n) - 1)),
// plus the fixed B_0 = 1, B_1 = -1/2 and vanishing odd values.
class TangentBernoulli {
public:
    explicit TangentBernoulli(unsigned long max_index)
        : tangents_(tangent_numbers(max_index / 2 + 1)) {}

    Rational get(unsigned long m) const {
        if (m == 0) return Rational(1);
        if (m == 1) return Rational(-1, 2);
        if (m % 2 == 1) return Rational(0);
        const unsigned long n = m / 2;
        Integer num = Integer(2 * n) * tangents_.at(n);
        Integer p = Integer::pow2(2 * n);
        Integer den = p * (p - Integer(1ul));
        Rational b(num, den);
        return (n % 2 == 0) ? -b : b;  // (-1)^(n-1)
    }

private:
    std::vector<Integer> tangents_;
};

// |a - b| <= ulps * 2^(max_exponent - min_precision)
inline bool agree_to_ulp(const Real& a, const Real& b, long ulps) {
    if (a.is_zero() && b.is_zero()) return true;
    const long prec = std::min(a.prec(), b.prec());
    mpfr_exp_t ea = a.is_zero() ? mpfr_get_exp(b.raw()) : mpfr_get_exp(a.raw());
    mpfr_exp_t eb = b.is_zero() ? ea : mpfr_get_exp(b.raw());
    const double bound =
        static_cast<double>(std::max(ea, eb)) - static_cast<double>(prec) +
        std::log2(static_cast<double>(ulps));
    return (a - b).log2_abs() <= bound;
}

// reference digits
inline const char* kPiDigits =
    "3.141592653589793238462643383279502884197169399375105820974944592307816406"
    "28620899862803482534211706798214808651328230664709384460955058223172535940"
    "8128481117450284102701938521105559644622948954930382";
inline const char* kZeta3Digits =
    "1.202056903159594285399738161511449990764986292340498881792271555341838205"
    "78631309018645587360933525814619915779526071941849199599867328321377639683"
    "7207900161453941782949360066719191575522242494243961";

struct Textbook {
    unsigned long n;
    const char* value;
};
inline const Textbook kBernoulliTable[] = {
    {0, "1"},          {1, "-1/2"},        {2, "1/6"},         {4, "-1/30"},
    {6, "1/42"},       {8, "-1/30"},       {10, "5/66"},       {12, "-691/2730"},
    {14, "7/6"},       {16, "-3617/510"},  {18, "43867/798"},  {20, "-174611/330"},
};

}  // namespace oracles
