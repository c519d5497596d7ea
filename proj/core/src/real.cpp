#include "oddzeta/real.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace oddzeta::series {

namespace {

long checked_prec(long prec) {
    if (prec < kMinPrecision) throw std::domain_error("real: precision must be >= 64 bits");
    return prec;
}

}  // namespace

Real::Real(long prec) {
    mpfr_init2(v_, checked_prec(prec));
    mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of(long v, long prec) {
    Real r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::of(unsigned long v, long prec) {
    Real r(prec);
    mpfr_set_ui(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::of(const exact::Rational& q, long prec) {
    Real r(prec);
    mpfr_set_q(r.v_, q.raw(), MPFR_RNDN);
    return r;
}

Real Real::of(const exact::Integer& z, long prec) {
    Real r(prec);
    mpfr_set_z(r.v_, z.raw(), MPFR_RNDN);
    return r;
}

Real Real::from_string(const std::string& s, long prec) {
    Real r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("real: malformed literal '" + s + "'");
    return r;
}

Real Real::round_to(long prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real& Real::operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real Real::mul(const exact::Rational& q) const {
    Real r(prec());
    mpfr_mul_q(r.v_, v_, q.raw(), MPFR_RNDN);
    return r;
}

Real Real::div(const exact::Rational& q) const {
    Real r(prec());
    mpfr_div_q(r.v_, v_, q.raw(), MPFR_RNDN);
    return r;
}

Real Real::pow_si(long e) const {
    Real r(prec());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

Real Real::exp() const {
    Real r(prec());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::atan() const {
    Real r(prec());
    mpfr_atan(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::abs() const {
    Real r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::mul_2exp(long k) const {
    Real r(prec());
    if (k >= 0)
        mpfr_mul_2ui(r.v_, v_, static_cast<unsigned long>(k), MPFR_RNDN);
    else
        mpfr_div_2ui(r.v_, v_, static_cast<unsigned long>(-k), MPFR_RNDN);
    return r;
}

double Real::log2_abs() const {
    if (is_zero()) return -HUGE_VAL;
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_abs(t, v_, MPFR_RNDN);
    mpfr_log2(t, t, MPFR_RNDN);
    double d = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return d;
}

std::string Real::decimal(size_t significant_digits) const {
    if (significant_digits == 0) significant_digits = 1;
    // "%.*Re" prints one digit before the point plus (n) after it
    int frac = static_cast<int>(significant_digits) - 1;
    int need = mpfr_snprintf(nullptr, 0, "%.*Re", frac, v_);
    std::vector<char> buf(static_cast<size_t>(need) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", frac, v_);
    return std::string(buf.data());
}

std::string Real::decimal_for_prec() const { return decimal(digits_for(prec())); }

size_t Real::digits_for(long prec) {
    return static_cast<size_t>(std::ceil(static_cast<double>(prec) * 0.30103));
}

Real pi(long prec) {
    Real r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

}  // namespace oddzeta::series
