#include "thetad/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>

namespace thetad {

namespace {

mpfr_prec_t checked_prec(mpfr_prec_t prec) {
    if (prec < BigFloat::min_precision) {
        throw std::invalid_argument("BigFloat: precision below 64 bits");
    }
    return prec;
}

mpfr_prec_t join_prec(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, checked_prec(prec));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, o.precision());
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
    }
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(v_);
}

BigFloat BigFloat::of(long v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(const BigInt& v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(const Rat& v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, v.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of_str(const std::string& s, mpfr_prec_t prec) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
        throw std::invalid_argument("BigFloat: cannot parse \"" + s + "\"");
    }
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow2(long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::to_precision(mpfr_prec_t prec) const {
    BigFloat r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::str(size_t digits) const {
    if (digits == 0) {
        digits = (size_t)((double)precision() * 0.30103) + 1;
    }
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", (int)digits - 1, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, long s) {
    BigFloat r(a.precision());
    mpfr_mul_si(r.v_, a.v_, s, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, long s) {
    BigFloat r(a.precision());
    mpfr_div_si(r.v_, a.v_, s, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigInt& s) {
    BigFloat r(a.precision());
    mpfr_mul_z(r.v_, a.v_, s.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& a) {
    if (a.sign() < 0) {
        throw std::domain_error("BigFloat sqrt: negative argument");
    }
    BigFloat r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
}

BigFloat exp(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join_prec(a, b));
    mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat pow_ui(const BigFloat& a, unsigned long k) {
    BigFloat r(a.precision());
    mpfr_pow_ui(r.v_, a.v_, k, MPFR_RNDN);
    return r;
}

BigFloat agm(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join_prec(a, b));
    mpfr_agm(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat ldexp(const BigFloat& a, long e) {
    BigFloat r(a.precision());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
}

int cmp(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_);
}

}  // namespace thetad
