#pragma once

#include "oddzeta/real.hpp"

namespace oddzeta::series {

/// Truncation certificate for an infinite-series evaluation: how many terms
/// were summed and a proven log2 upper bound on the omitted tail. Certified
/// evaluations guarantee tail_bound_log2 <= -(prec + kGuardBits); oracle-grade
/// evaluations record the honest (much larger) bracket instead.
struct SeriesTruncation {
    unsigned long terms_used = 0;
    double tail_bound_log2 = 0.0;
};

struct SumResult {
    Real value;
    SeriesTruncation truncation;
};

/// zeta(s) for integer s >= 2 by Euler-Maclaurin summation: a direct sum of
/// ~W/4 terms plus Bernoulli correction terms up to ~W/8 (W = prec + guard),
/// sized so the first omitted correction term is below 2^-(W+2). Total error
/// <= 2^(kGuardBits - prec). Throws std::domain_error for s <= 1.
Real zeta_integer(long s, long prec);

/// sum_{n>=1} n^-s / (e^(2an) - 1) for odd s >= 3 and a > 0, truncated at the
/// smallest N whose geometric tail bound e^(-2a(N+1)) / (1 - e^(-2a))^2 is
/// below 2^-(prec + kGuardBits); the certificate is returned. Throws
/// std::domain_error for a <= 0 or invalid s.
SumResult lambert_sum(long s, const Real& a, long prec);

/// sum_{n>=1} coth(pi n) / n^s for s = 4m+3, via
/// coth(pi n) = 1 + 2/(e^(2 pi n) - 1), i.e. zeta(s) + 2 lambert_sum(s, pi).
/// Throws std::domain_error unless s >= 3 and s == 3 (mod 4).
SumResult coth_sum(long s, long prec);

/// K-term Mittag-Leffler partial sum 1/(pi x) + (2x/pi) sum_{k<=K} 1/(x^2+k^2)
/// for x > 0. Oracle-grade: converges to coth(pi x) from below at rate O(1/K);
/// the recorded tail bound is the integral-comparison upper bracket
/// (2x/pi)/K. Throws std::domain_error for x <= 0 or K < 1.
SumResult mittag_leffler_coth(const Real& x, unsigned long K, long prec);

/// Brute-force truncated double sum
///   sum_{n=1}^{N} sum_{k=1}^{N} 1 / (n^en * k^ek * (k^2 + a2 * n^2))
/// at the precision of a2. Oracle-grade (tail decays like O(1/N), no
/// certificate). Exponents must be even; a2 > 0; N >= 1.
Real double_sum_truncated(const Real& a2, unsigned long exponent_n, unsigned long exponent_k,
                          unsigned long N);

/// The same sum evaluated over the [1..2N]^2 box in one pass, keeping the
/// [1..N]^2 corner: value_n is bit-identical to double_sum_truncated(.., N)
/// and value_2n to double_sum_truncated(.., 2N). Used for the N-vs-2N
/// tail self-calibration.
struct DoubleSumPair {
    Real value_n;
    Real value_2n;
};
DoubleSumPair double_sum_refined(const Real& a2, unsigned long exponent_n,
                                 unsigned long exponent_k, unsigned long N);

/// K-term partial sum of sum_k k^-s at the given precision (s >= 2 even in
/// practice; any s >= 1 accepted).
Real partial_zeta(unsigned long s, unsigned long K, long prec);

}  // namespace oddzeta::series
