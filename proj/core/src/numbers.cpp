#include "thetad/numbers.hpp"

#include <stdexcept>

#include "thetad/errors.hpp"

namespace thetad {

Rat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("make_rat: zero denominator");
    }
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat make_rat(long num, long den) {
    if (den == 0) {
        throw std::domain_error("make_rat: zero denominator");
    }
    Rat q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rat& q) {
    return q.get_den() == 1;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::vector<BigInt> binomial_row(unsigned long n) {
    std::vector<BigInt> row(n + 1);
    row[0] = 1;
    // C(n,k+1) = C(n,k) * (n-k) / (k+1), an exact division at every step.
    for (unsigned long k = 0; k < n; ++k) {
        row[k + 1] = row[k] * (long)(n - k);
        mpz_divexact_ui(row[k + 1].get_mpz_t(), row[k + 1].get_mpz_t(), k + 1);
    }
    return row;
}

BigInt divide_exact(const BigInt& a, const BigInt& b, const char* where) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
        throw IntegralityError(where);
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace thetad
