#include "oddzeta/rational.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace oddzeta::exact {

Integer Integer::factorial(unsigned long n) {
    static std::mutex mu;
    static std::vector<Integer> memo;  // memo[i] = i!
    std::lock_guard<std::mutex> lock(mu);
    if (memo.empty()) memo.emplace_back(1ul);
    while (memo.size() <= n) {
        Integer next = memo.back();
        next *= static_cast<unsigned long>(memo.size());
        memo.push_back(std::move(next));
    }
    return memo[n];
}

Integer Integer::binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.z_, n, k);
    return r;
}

Integer Integer::pow(unsigned long base, unsigned long exp) {
    Integer r;
    mpz_ui_pow_ui(r.z_, base, exp);
    return r;
}

Integer Integer::operator-() const {
    Integer r(*this);
    mpz_neg(r.z_, r.z_);
    return r;
}

Integer Integer::operator+(const Integer& o) const {
    Integer r;
    mpz_add(r.z_, z_, o.z_);
    return r;
}

Integer Integer::operator-(const Integer& o) const {
    Integer r;
    mpz_sub(r.z_, z_, o.z_);
    return r;
}

Integer Integer::operator*(const Integer& o) const {
    Integer r;
    mpz_mul(r.z_, z_, o.z_);
    return r;
}

std::string Integer::to_string() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, out.size() + 1);
    return out;
}

Rational::Rational(long num, long den) {
    mpq_init(q_);
    if (den == 0) {
        mpq_clear(q_);
        throw std::domain_error("rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpq_set_si(q_, num, static_cast<unsigned long>(den));
    mpq_canonicalize(q_);
}

Rational::Rational(const Integer& num, const Integer& den) {
    mpq_init(q_);
    if (den.sign() == 0) {
        mpq_clear(q_);
        throw std::domain_error("rational: zero denominator");
    }
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    if (den.sign() < 0) {
        mpz_neg(mpq_numref(q_), mpq_numref(q_));
        mpz_neg(mpq_denref(q_), mpq_denref(q_));
    }
    mpq_canonicalize(q_);
}

Rational::Rational(const Integer& v) {
    mpq_init(q_);
    mpq_set_z(q_, v.raw());
}

Rational Rational::from_string(const std::string& s) {
    // Accept [sign] digits [ '/' digits ]; anything else (notably decimals)
    // is rejected so exact constraints cannot be silently broken.
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
        ++digits;
    }
    if (digits == 0) throw std::invalid_argument("rational: malformed value '" + s + "'");
    if (i < s.size()) {
        if (s[i] != '/') throw std::invalid_argument("rational: malformed value '" + s + "'");
        ++i;
        size_t den_digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
            ++den_digits;
        }
        if (den_digits == 0 || i != s.size())
            throw std::invalid_argument("rational: malformed value '" + s + "'");
    }
    Rational r;
    const std::string body = s[0] == '+' ? s.substr(1) : s;  // gmp rejects a leading '+'
    if (mpq_set_str(r.q_, body.c_str(), 10) != 0)
        throw std::invalid_argument("rational: malformed value '" + s + "'");
    if (mpz_sgn(mpq_denref(r.q_)) == 0) throw std::domain_error("rational: zero denominator");
    mpq_canonicalize(r.q_);
    return r;
}

Integer Rational::numerator() const {
    Integer r;
    mpz_set(r.raw(), mpq_numref(q_));
    return r;
}

Integer Rational::denominator() const {
    Integer r;
    mpz_set(r.raw(), mpq_denref(q_));
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    Rational r;
    mpq_add(r.q_, q_, o.q_);
    return r;
}

Rational Rational::operator-(const Rational& o) const {
    Rational r;
    mpq_sub(r.q_, q_, o.q_);
    return r;
}

Rational Rational::operator*(const Rational& o) const {
    Rational r;
    mpq_mul(r.q_, q_, o.q_);
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    Rational r;
    mpq_div(r.q_, q_, o.q_);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("rational: reciprocal of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e > 0 ? *this : reciprocal();
    const unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                                  : static_cast<unsigned long>(-(e + 1)) + 1;
    Rational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), n);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), n);
    // powers of a canonical form stay canonical
    return r;
}

std::string Rational::to_string() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, out.size() + 1);
    return out;
}

}  // namespace oddzeta::exact
