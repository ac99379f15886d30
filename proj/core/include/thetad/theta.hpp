#pragma once

#include <vector>

#include "thetad/bigfloat.hpp"
#include "thetad/numbers.hpp"

namespace thetad {

// The constants attached to theta3 at x = 1:
//
//   theta3(1) = Gamma(1/4) / (sqrt(2) pi^{3/4})
//   Omega     = Gamma(1/4)^8 / (32 pi^4) = pi^2 theta3(1)^8 / 2
//   Phi       = Omega / 4
//
// omega == 4*phi holds exactly (phi is an exact binary shift of omega).
struct Constants {
    mpfr_prec_t precision;
    BigFloat theta3_1;
    BigFloat gamma_quarter;
    BigFloat omega;
    BigFloat phi;
};

// theta3(x) = 1 + 2 sum_{n>=1} e^{-pi n^2 x} for x > 0, summed until the
// first omitted term is below 2^{-(precision+32)}.
// Throws std::domain_error if x <= 0.
BigFloat theta3(const BigFloat& x, mpfr_prec_t precision);

// n-th derivative of theta3 at x = 1 via term-wise differentiation:
//   theta3^(n)(1) = 2 sum_{m>=1} (-pi m^2)^n e^{-pi m^2}   (n >= 1).
// The truncation rule accounts for the polynomial prefactor: stop once
// m^{2n} e^{-pi m^2} < 2^{-(precision+32)} for two consecutive m.
BigFloat theta3_deriv(int n, mpfr_prec_t precision);

// Derivatives d^j/dx^j theta3(x) for j = 0..j_max at a general x > 0,
// sharing one pass over the q-powers.
std::vector<BigFloat> theta3_derivs_at(const BigFloat& x, int j_max,
                                       mpfr_prec_t precision);

Constants constants(mpfr_prec_t precision);

// sigma3(z) = theta3((1-z)/(1+z)) / sqrt(1+z) for |z| < 1.
// Throws std::domain_error if |z| >= 1.
BigFloat sigma3(const BigFloat& z, mpfr_prec_t precision);

// 2F1(a,b;c;x) for rational parameters and |x| < 1, by direct summation
// with the term-ratio recurrence.  Throws PoleInC if c is a nonpositive
// integer, std::domain_error if |x| >= 1, NoConvergence if the terms fail
// to fall below the threshold within the iteration cap.
BigFloat hyp2f1_value(const Rat& a, const Rat& b, const Rat& c,
                      const BigFloat& x, mpfr_prec_t precision);

}  // namespace thetad
