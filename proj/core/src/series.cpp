#include "oddzeta/series.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "oddzeta/bernoulli.hpp"

namespace oddzeta::series {

namespace {

constexpr unsigned long kMaxEmCorrections = 512;
constexpr unsigned long kRowBlock = 128;  // outer-loop block size for double sums

// log2 upper bound on the first omitted Euler-Maclaurin correction term
// (j = J+1): |B_(2J+2)/(2J+2)!| <= 4/(2pi)^(2J+2), times the Pochhammer factor
// s(s+1)...(s+2J) = Gamma(s+2J+1)/Gamma(s), times N^-(s+2J+1).
double em_first_omitted_log2(long s, unsigned long N, unsigned long J) {
    const double log2_2pi = 2.651496129472319;
    double poch = (std::lgamma(static_cast<double>(s) + 2.0 * J + 1.0) -
                   std::lgamma(static_cast<double>(s))) /
                  std::log(2.0);
    return 2.0 - (2.0 * J + 2.0) * log2_2pi + poch -
           (static_cast<double>(s) + 2.0 * J + 1.0) * std::log2(static_cast<double>(N));
}

}  // namespace

Real zeta_integer(long s, long prec) {
    if (s <= 1) throw std::domain_error("zeta_integer: s must be >= 2");
    const long W = prec + kGuardBits;

    unsigned long N = std::max<unsigned long>(16, static_cast<unsigned long>(W) / 4);
    const unsigned long J =
        std::max<unsigned long>(4, std::min<unsigned long>(static_cast<unsigned long>(W) / 8,
                                                           kMaxEmCorrections));
    while (em_first_omitted_log2(s, N, J) > -static_cast<double>(W + 2)) N += N / 3 + 8;

    Real acc(W);
    {
        // direct sum over n < N
        mpfr_t term, den;
        mpfr_init2(term, W);
        mpfr_init2(den, W);
        mpz_t npow;
        mpz_init(npow);
        for (unsigned long n = 1; n < N; ++n) {
            mpz_ui_pow_ui(npow, n, static_cast<unsigned long>(s));
            mpfr_set_z(den, npow, MPFR_RNDN);
            mpfr_ui_div(term, 1, den, MPFR_RNDN);
            mpfr_add(acc.raw(), acc.raw(), term, MPFR_RNDN);
        }
        // integral tail N^(1-s)/(s-1) and the half-term N^(-s)/2
        mpz_ui_pow_ui(npow, N, static_cast<unsigned long>(s - 1));
        mpz_mul_ui(npow, npow, static_cast<unsigned long>(s - 1));
        mpfr_set_z(den, npow, MPFR_RNDN);
        mpfr_ui_div(term, 1, den, MPFR_RNDN);
        mpfr_add(acc.raw(), acc.raw(), term, MPFR_RNDN);

        mpz_ui_pow_ui(npow, N, static_cast<unsigned long>(s));
        mpz_mul_ui(npow, npow, 2);
        mpfr_set_z(den, npow, MPFR_RNDN);
        mpfr_ui_div(term, 1, den, MPFR_RNDN);
        mpfr_add(acc.raw(), acc.raw(), term, MPFR_RNDN);

        // corrections: B_(2j)/(2j)! * s(s+1)...(s+2j-2) * N^-(s+2j-1)
        mpfr_t running, invN2;
        mpfr_init2(running, W);
        mpfr_init2(invN2, W);
        mpz_ui_pow_ui(npow, N, static_cast<unsigned long>(s + 1));
        mpfr_set_z(running, npow, MPFR_RNDN);
        mpfr_ui_div(running, 1, running, MPFR_RNDN);  // N^-(s+1)
        mpfr_set_ui(invN2, N, MPFR_RNDN);
        mpfr_sqr(invN2, invN2, MPFR_RNDN);
        mpfr_ui_div(invN2, 1, invN2, MPFR_RNDN);

        mpz_t poch;
        mpz_init_set_si(poch, s);  // j=1: product over s..s+2j-2 = s
        for (unsigned long j = 1; j <= J; ++j) {
            if (j > 1) {
                mpz_mul_ui(poch, poch, static_cast<unsigned long>(s) + 2 * j - 3);
                mpz_mul_ui(poch, poch, static_cast<unsigned long>(s) + 2 * j - 2);
                mpfr_mul(running, running, invN2, MPFR_RNDN);  // N^-(s+2j-1)
            }
            exact::Rational b2j_over_fact =
                exact::bernoulli(2 * j) / exact::Rational(exact::Integer::factorial(2 * j));
            mpfr_mul_z(term, running, poch, MPFR_RNDN);
            mpfr_mul_q(term, term, b2j_over_fact.raw(), MPFR_RNDN);
            mpfr_add(acc.raw(), acc.raw(), term, MPFR_RNDN);
        }
        mpz_clear(poch);
        mpfr_clear(running);
        mpfr_clear(invN2);
        mpz_clear(npow);
        mpfr_clear(term);
        mpfr_clear(den);
    }
    return acc.round_to(prec);
}

SumResult lambert_sum(long s, const Real& a, long prec) {
    if (s < 3 || s % 2 == 0) throw std::domain_error("lambert_sum: s must be odd and >= 3");
    if (a.sign() <= 0) throw std::domain_error("lambert_sum: a must be positive");
    const long W = prec + kGuardBits;

    // tail for n > N:  sum n^-s/(e^(2an)-1) <= e^(-2a(N+1)) / (1-e^(-2a))^2
    const double ad = a.to_double();
    const double nd = std::ceil(static_cast<double>(W) * std::log(2.0) / (2.0 * ad));
    if (!(nd < 1e9))
        throw std::domain_error("lambert_sum: a too small for certified evaluation");
    const double log2e = 1.4426950408889634;
    const double denom_log2 = 2.0 * std::log2(-std::expm1(-2.0 * ad));
    auto tail_log2 = [&](unsigned long N) {
        return -2.0 * ad * static_cast<double>(N + 1) * log2e - denom_log2;
    };
    unsigned long N = static_cast<unsigned long>(nd) + 2;
    while (tail_log2(N) > -static_cast<double>(W)) N += N / 4 + 8;

    Real acc(W);
    {
        mpfr_t q, qn, den, term;
        mpfr_init2(q, W);
        mpfr_init2(qn, W);
        mpfr_init2(den, W);
        mpfr_init2(term, W);
        mpz_t npow;
        mpz_init(npow);

        mpfr_mul_si(q, a.raw(), -2, MPFR_RNDN);
        mpfr_exp(q, q, MPFR_RNDN);  // q = e^(-2a)
        mpfr_set_ui(qn, 1, MPFR_RNDN);
        for (unsigned long n = 1; n <= N; ++n) {
            // n^-s/(e^(2an)-1) = q^n / (n^s (1 - q^n))
            mpfr_mul(qn, qn, q, MPFR_RNDN);
            mpfr_ui_sub(den, 1, qn, MPFR_RNDN);
            mpz_ui_pow_ui(npow, n, static_cast<unsigned long>(s));
            mpfr_mul_z(den, den, npow, MPFR_RNDN);
            mpfr_div(term, qn, den, MPFR_RNDN);
            mpfr_add(acc.raw(), acc.raw(), term, MPFR_RNDN);
        }
        mpz_clear(npow);
        mpfr_clear(q);
        mpfr_clear(qn);
        mpfr_clear(den);
        mpfr_clear(term);
    }
    return SumResult{acc.round_to(prec), SeriesTruncation{N, tail_log2(N)}};
}

SumResult coth_sum(long s, long prec) {
    if (s < 3 || s % 4 != 3)
        throw std::domain_error("coth_sum: s must be of the form 4m+3");
    const long W = prec + kGuardBits;
    Real z = zeta_integer(s, W);
    SumResult lam = lambert_sum(s, pi(W), W);
    Real value = z + lam.value.mul_2exp(1);
    return SumResult{value.round_to(prec), lam.truncation};
}

SumResult mittag_leffler_coth(const Real& x, unsigned long K, long prec) {
    if (x.sign() <= 0) throw std::domain_error("mittag_leffler_coth: x must be positive");
    if (K < 1) throw std::domain_error("mittag_leffler_coth: K must be >= 1");
    const long W = prec + kGuardBits;

    Real xw = x.round_to(W);
    Real pw = pi(W);
    Real acc = Real::of(1ul, W) / (pw * xw);  // 1/(pi x)

    Real inner(W);
    {
        mpfr_t x2, den, term;
        mpfr_init2(x2, W);
        mpfr_init2(den, W);
        mpfr_init2(term, W);
        mpfr_sqr(x2, xw.raw(), MPFR_RNDN);
        for (unsigned long k = 1; k <= K; ++k) {
            mpfr_add_ui(den, x2, k * k, MPFR_RNDN);
            mpfr_ui_div(term, 1, den, MPFR_RNDN);
            mpfr_add(inner.raw(), inner.raw(), term, MPFR_RNDN);
        }
        mpfr_clear(x2);
        mpfr_clear(den);
        mpfr_clear(term);
    }
    Real factor = xw.mul_2exp(1) / pw;  // 2x/pi
    acc += factor * inner;

    // integral bracket: tail <= (2x/pi) * (1/K)
    double tail_upper_log2 = (factor / Real::of(K, W)).log2_abs();
    return SumResult{acc.round_to(prec), SeriesTruncation{K, tail_upper_log2}};
}

Real partial_zeta(unsigned long s, unsigned long K, long prec) {
    if (s < 1) throw std::domain_error("partial_zeta: s must be >= 1");
    Real acc(prec);
    mpfr_t den, term;
    mpfr_init2(den, prec);
    mpfr_init2(term, prec);
    mpz_t kpow;
    mpz_init(kpow);
    for (unsigned long k = 1; k <= K; ++k) {
        mpz_ui_pow_ui(kpow, k, s);
        mpfr_set_z(den, kpow, MPFR_RNDN);
        mpfr_ui_div(term, 1, den, MPFR_RNDN);
        mpfr_add(acc.raw(), acc.raw(), term, MPFR_RNDN);
    }
    mpz_clear(kpow);
    mpfr_clear(den);
    mpfr_clear(term);
    return acc;
}

namespace {

// One row of the double sum: inner_corner = sum_{k<=k_corner}, then the same
// accumulator continues to k_max (so the full-row value has the identical
// rounding sequence as a straight 1..k_max pass).
struct DoubleSumWorkspace {
    mpfr_t c, den, term, inner_corner, inner_full, row;
    mpz_t pw;
    long W;
    explicit DoubleSumWorkspace(long prec) : W(prec) {
        mpfr_init2(c, W);
        mpfr_init2(den, W);
        mpfr_init2(term, W);
        mpfr_init2(inner_corner, W);
        mpfr_init2(inner_full, W);
        mpfr_init2(row, W);
        mpz_init(pw);
    }
    ~DoubleSumWorkspace() {
        mpfr_clear(c);
        mpfr_clear(den);
        mpfr_clear(term);
        mpfr_clear(inner_corner);
        mpfr_clear(inner_full);
        mpfr_clear(row);
        mpz_clear(pw);
    }
};

void double_sum_row(DoubleSumWorkspace& ws, mpfr_srcptr a2, unsigned long en, unsigned long ek,
                    unsigned long n, unsigned long k_corner, unsigned long k_max,
                    mpfr_ptr corner_acc, mpfr_ptr full_acc) {
    mpfr_mul_ui(ws.c, a2, n * n, MPFR_RNDN);  // a2 * n^2
    mpfr_set_ui(ws.inner_full, 0, MPFR_RNDN);
    mpfr_set_ui(ws.inner_corner, 0, MPFR_RNDN);
    for (unsigned long k = 1; k <= k_max; ++k) {
        mpfr_add_ui(ws.den, ws.c, k * k, MPFR_RNDN);
        if (ek > 0) {
            mpz_ui_pow_ui(ws.pw, k, ek);
            mpfr_mul_z(ws.den, ws.den, ws.pw, MPFR_RNDN);
        }
        mpfr_ui_div(ws.term, 1, ws.den, MPFR_RNDN);
        mpfr_add(ws.inner_full, ws.inner_full, ws.term, MPFR_RNDN);
        if (k == k_corner) mpfr_set(ws.inner_corner, ws.inner_full, MPFR_RNDN);
    }
    if (en > 0) {
        mpz_ui_pow_ui(ws.pw, n, en);
        if (corner_acc != nullptr) {
            mpfr_div_z(ws.row, ws.inner_corner, ws.pw, MPFR_RNDN);
            mpfr_add(corner_acc, corner_acc, ws.row, MPFR_RNDN);
        }
        mpfr_div_z(ws.row, ws.inner_full, ws.pw, MPFR_RNDN);
        mpfr_add(full_acc, full_acc, ws.row, MPFR_RNDN);
    } else {
        if (corner_acc != nullptr) mpfr_add(corner_acc, corner_acc, ws.inner_corner, MPFR_RNDN);
        mpfr_add(full_acc, full_acc, ws.inner_full, MPFR_RNDN);
    }
}

// Shared core: sums the [1..box]^2 region and the [1..corner]^2 corner.
// Rows are processed in fixed blocks of kRowBlock and block partials are
// combined in block order, so the result does not depend on the thread count.
DoubleSumPair double_sum_core(const Real& a2, unsigned long en, unsigned long ek,
                              unsigned long corner, unsigned long box) {
    const long W = a2.prec();
    const unsigned long nblocks = (box + kRowBlock - 1) / kRowBlock;
    std::vector<Real> corner_partials(nblocks, Real(W));
    std::vector<Real> full_partials(nblocks, Real(W));

    std::atomic<unsigned long> next{0};
    auto worker = [&]() {
        DoubleSumWorkspace ws(W);
        for (;;) {
            unsigned long b = next.fetch_add(1);
            if (b >= nblocks) break;
            const unsigned long lo = b * kRowBlock + 1;
            const unsigned long hi = std::min(box, lo + kRowBlock - 1);
            mpfr_ptr cacc = corner_partials[b].raw();
            mpfr_ptr facc = full_partials[b].raw();
            for (unsigned long n = lo; n <= hi; ++n)
                double_sum_row(ws, a2.raw(), en, ek, n, corner, box,
                               n <= corner ? cacc : nullptr, facc);
        }
    };

    unsigned long nthreads = std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned long>(nthreads, nblocks);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned long i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    DoubleSumPair out{Real(W), Real(W)};
    for (unsigned long b = 0; b < nblocks; ++b) {
        out.value_n += corner_partials[b];
        out.value_2n += full_partials[b];
    }
    return out;
}

void check_double_sum_args(const Real& a2, unsigned long en, unsigned long ek, unsigned long N) {
    if (N < 1) throw std::domain_error("double_sum: N must be >= 1");
    if (a2.sign() <= 0) throw std::domain_error("double_sum: a2 must be positive");
    if (en % 2 != 0 || ek % 2 != 0)
        throw std::domain_error("double_sum: exponents must be even");
}

}  // namespace

Real double_sum_truncated(const Real& a2, unsigned long exponent_n, unsigned long exponent_k,
                          unsigned long N) {
    check_double_sum_args(a2, exponent_n, exponent_k, N);
    return double_sum_core(a2, exponent_n, exponent_k, N, N).value_2n;
}

DoubleSumPair double_sum_refined(const Real& a2, unsigned long exponent_n,
                                 unsigned long exponent_k, unsigned long N) {
    check_double_sum_args(a2, exponent_n, exponent_k, N);
    return double_sum_core(a2, exponent_n, exponent_k, N, 2 * N);
}

}  // namespace oddzeta::series
