#pragma once

#include <vector>

#include "thetad/numbers.hpp"

namespace thetad {

// A truncated power series sum_{j=0}^{order} c_j t^j with exact rational
// coefficients.  The truncation order is part of the value: arithmetic on two
// series truncates the result to the smaller of the two orders, so every
// coefficient of a result is one the inputs actually determine.
class Series {
public:
    // The zero series of the given truncation order.
    explicit Series(int order);

    // Takes the coefficients c_0..c_n verbatim; order = n.
    explicit Series(std::vector<Rat> coeffs);

    static Series constant(const Rat& value, int order);
    static Series one(int order) { return constant(Rat(1), order); }

    int order() const { return (int)c_.size() - 1; }

    // c_j; throws OrderExceeded for j > order(), std::invalid_argument for
    // j < 0.
    const Rat& coeff(int j) const;

    // Assigns c_j (same index checks as coeff()).
    void set_coeff(int j, Rat value);

    // Copy truncated to new_order <= order().
    Series truncated(int new_order) const;

    // Termwise derivative d/dt; order drops by one.  Requires order() >= 1.
    Series derivative() const;

    // k-th power at this truncation order; pow(0) is the constant series 1.
    Series pow(unsigned long k) const;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);

    // Formal quotient via forward substitution; throws ZeroConstantTerm if
    // b.coeff(0) == 0.
    friend Series operator/(const Series& a, const Series& b);

    friend Series operator*(const Rat& s, const Series& a);

    // Exact coefficient-wise comparison; orders must match too.
    friend bool operator==(const Series& a, const Series& b);

private:
    std::vector<Rat> c_;  // size order+1
};

// Taylor coefficients (in t) of 2F1(a,b;c; scale*t) through the given order.
// Term recurrence: coeff_{n+1} = coeff_n * (a+n)(b+n) / ((c+n)(n+1)) * scale.
// Throws PoleInC if c is a nonpositive integer.
Series hypergeometric_series(const Rat& a, const Rat& b, const Rat& c,
                             const Rat& scale, int order);

}  // namespace thetad
