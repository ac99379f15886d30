#pragma once

#include <gmpxx.h>

#include <vector>

namespace thetad {

// Arbitrary-precision integers and rationals.  Rationals are always kept in
// canonical form: lowest terms, positive denominator.
using BigInt = mpz_class;
using Rat = mpq_class;

// num/den as a canonical rational; throws std::domain_error if den == 0.
Rat make_rat(const BigInt& num, const BigInt& den);
Rat make_rat(long num, long den = 1);

// True iff q has denominator 1.
bool is_integer(const Rat& q);

BigInt factorial(unsigned long n);

BigInt binomial(unsigned long n, unsigned long k);

// The full row C(n,0), C(n,1), ..., C(n,n), computed incrementally with
// exact divisions.  Cheaper than n separate binomial() calls when the whole
// row is consumed.
std::vector<BigInt> binomial_row(unsigned long n);

// Exact quotient a/b; throws IntegralityError(where) if b does not divide a.
BigInt divide_exact(const BigInt& a, const BigInt& b, const char* where);

}  // namespace thetad
