#pragma once

#include <mpfr.h>

#include <string>

#include "thetad/numbers.hpp"

namespace thetad {

// RAII wrapper over an mpfr_t.  Precision (in bits, >= 64) is explicit in
// every constructor; there is no ambient default.  Binary operations carry
// the larger of the two operand precisions and round to nearest.
class BigFloat {
public:
    static constexpr mpfr_prec_t min_precision = 64;

    // Zero at the given precision.
    explicit BigFloat(mpfr_prec_t prec);

    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat of(long v, mpfr_prec_t prec);
    static BigFloat of(const BigInt& v, mpfr_prec_t prec);
    static BigFloat of(const Rat& v, mpfr_prec_t prec);
    // Decimal string, e.g. "0.25" or "1.5e-3".
    static BigFloat of_str(const std::string& s, mpfr_prec_t prec);
    static BigFloat pi(mpfr_prec_t prec);
    // 2^e exactly (useful for tolerances like 2^-160).
    static BigFloat pow2(long e, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    // Rounded copy at a different precision.
    BigFloat to_precision(mpfr_prec_t prec) const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Scientific-notation decimal string; digits = 0 picks the full decimal
    // equivalent of the binary precision.
    std::string str(size_t digits = 0) const;

    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
    BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

    friend BigFloat operator*(const BigFloat& a, long s);
    friend BigFloat operator/(const BigFloat& a, long s);
    friend BigFloat operator*(const BigFloat& a, const BigInt& s);

    friend BigFloat sqrt(const BigFloat& a);   // a >= 0
    friend BigFloat exp(const BigFloat& a);
    friend BigFloat abs(const BigFloat& a);
    // a^b for real a > 0 (or integer cases mpfr handles).
    friend BigFloat pow(const BigFloat& a, const BigFloat& b);
    friend BigFloat pow_ui(const BigFloat& a, unsigned long k);
    // Arithmetic-geometric mean (used by the independent Gamma(1/4) check).
    friend BigFloat agm(const BigFloat& a, const BigFloat& b);
    // a * 2^e, exact.
    friend BigFloat ldexp(const BigFloat& a, long e);

    // <0, 0, >0 as a < b, a == b, a > b.
    friend int cmp(const BigFloat& a, const BigFloat& b);
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    mpfr_t v_;
};

}  // namespace thetad
