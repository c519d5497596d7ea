#pragma once

#include <mpfr.h>

#include <string>

#include "oddzeta/rational.hpp"

namespace oddzeta::series {

/// Minimum supported working precision in bits.
inline constexpr long kMinPrecision = 64;

/// Guard bits: series evaluate internally at prec + kGuardBits and claim prec
/// externally, so a claimed result carries relative error <= 2^(g - prec)
/// with g = kGuardBits.
inline constexpr long kGuardBits = 32;

/// Arbitrary-precision real number (MPFR-backed, round-to-nearest) tagged
/// with its working precision in bits. Values are immutable in spirit: every
/// operation returns a fresh Real, and binary operations round at the larger
/// of the two operand precisions.
class Real {
public:
    /// Zero at the minimum precision.
    Real() : Real(kMinPrecision) {}
    /// Zero at the given precision. Throws std::domain_error if prec < 64.
    explicit Real(long prec);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static Real of(long v, long prec);
    static Real of(unsigned long v, long prec);
    static Real of(const exact::Rational& q, long prec);
    static Real of(const exact::Integer& z, long prec);
    /// Parses a decimal literal at the given precision (tests/oracles).
    static Real from_string(const std::string& s, long prec);

    long prec() const { return mpfr_get_prec(v_); }
    /// Re-round to a different precision.
    Real round_to(long prec) const;

    Real operator-() const;
    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    /// Exact-rational multiply/divide (single correctly rounded operation).
    Real mul(const exact::Rational& q) const;
    Real div(const exact::Rational& q) const;

    Real pow_si(long e) const;
    Real exp() const;
    Real atan() const;
    Real abs() const;
    /// Exact scaling by 2^k.
    Real mul_2exp(long k) const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator==(const Real& o) const { return mpfr_equal_p(v_, o.v_) != 0; }
    bool operator<(const Real& o) const { return cmp(o) < 0; }
    bool operator<=(const Real& o) const { return cmp(o) <= 0; }
    bool operator>(const Real& o) const { return cmp(o) > 0; }
    bool operator>=(const Real& o) const { return cmp(o) >= 0; }

    /// log2(|x|) as a double; -HUGE_VAL for zero.
    double log2_abs() const;
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Scientific-notation decimal string with the given significant digits.
    std::string decimal(size_t significant_digits) const;
    /// Digits matching this value's precision: ceil(prec * 0.30103).
    std::string decimal_for_prec() const;

    /// Number of significant decimal digits used to serialize prec bits.
    static size_t digits_for(long prec);

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    mpfr_t v_;
};

/// pi to <= 1 ulp at the given precision; deterministic per prec.
Real pi(long prec);

}  // namespace oddzeta::series
