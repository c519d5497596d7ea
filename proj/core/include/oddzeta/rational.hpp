#pragma once

#include <gmp.h>

#include <compare>
#include <string>

namespace oddzeta::exact {

/// Arbitrary-size signed integer (GMP-backed value type).
class Integer {
public:
    Integer() { mpz_init(z_); }
    Integer(long v) { mpz_init_set_si(z_, v); }
    Integer(unsigned long v) { mpz_init_set_ui(z_, v); }
    Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
    Integer(Integer&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Integer& operator=(const Integer& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Integer() { mpz_clear(z_); }

    /// n! (exact, memoized internally for small n).
    static Integer factorial(unsigned long n);
    /// Binomial coefficient C(n, k).
    static Integer binomial(unsigned long n, unsigned long k);
    /// base^exp for non-negative integer exponents.
    static Integer pow(unsigned long base, unsigned long exp);
    /// 2^exp.
    static Integer pow2(unsigned long exp) { return pow(2, exp); }

    Integer operator-() const;
    Integer operator+(const Integer& o) const;
    Integer operator-(const Integer& o) const;
    Integer operator*(const Integer& o) const;
    Integer& operator*=(const Integer& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }
    Integer& operator*=(unsigned long v) {
        mpz_mul_ui(z_, z_, v);
        return *this;
    }

    bool operator==(const Integer& o) const { return mpz_cmp(z_, o.z_) == 0; }
    std::strong_ordering operator<=>(const Integer& o) const {
        int c = mpz_cmp(z_, o.z_);
        return c <=> 0;
    }
    bool operator==(long v) const { return mpz_cmp_si(z_, v) == 0; }

    int sign() const { return mpz_sgn(z_); }
    bool fits_ulong() const { return mpz_fits_ulong_p(z_) != 0; }
    unsigned long as_ulong() const { return mpz_get_ui(z_); }
    std::string to_string() const;

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

private:
    mpz_t z_;
};

/// Exact arbitrary-size rational, always in lowest terms with positive
/// denominator. Arithmetic is exact and closed; equal values have a unique
/// representation, so repeated computations are bit-identical.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    /// num/den, reduced. Throws std::domain_error if den == 0.
    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const Integer& v);
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    /// Parses "p", "-p" or "p/q" (decimal digits only). Throws
    /// std::invalid_argument on malformed input, std::domain_error on q == 0.
    static Rational from_string(const std::string& s);

    Integer numerator() const;
    Integer denominator() const;

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    /// Throws std::domain_error on division by zero.
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o);

    bool operator==(const Rational& o) const { return mpq_equal(q_, o.q_) != 0; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = mpq_cmp(q_, o.q_);
        return c <=> 0;
    }
    bool operator==(long v) const { return mpq_cmp_si(q_, v, 1) == 0; }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    Rational abs() const;
    /// Throws std::domain_error for the reciprocal of zero.
    Rational reciprocal() const;
    /// Integer power; negative exponents invert (throws on 0^negative).
    Rational pow(long e) const;

    /// "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

    mpq_srcptr raw() const { return q_; }

private:
    mpq_t q_;
};

}  // namespace oddzeta::exact
