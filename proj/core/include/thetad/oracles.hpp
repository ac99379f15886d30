#pragma once

#include <optional>
#include <string>

#include "thetad/bigfloat.hpp"
#include "thetad/numbers.hpp"
#include "thetad/sequences.hpp"

namespace thetad {

// Outcome of one numeric cross-check.  exact_value is present when the
// check targets an exact rational (e.g. an integer d(j)); when two numeric
// evaluations are compared against each other it is absent.
//
// Tolerances follow one rule: max(truncation-tail estimate,
// 2^{-(precision-48)} x rounding scale), where the rounding scale is the
// largest intermediate magnitude of the computation (1 when all
// intermediates are O(1)).  pass <=> abs_error <= tolerance.
struct OracleVerdict {
    std::string quantity;
    std::optional<Rat> exact_value;
    BigFloat oracle_value;
    BigFloat abs_error;
    BigFloat tolerance;
    bool pass;
};

// Reconstructs d(j) from the Hermite-sum identity
//   sum_{n in Z} e^{-pi n^2} H_{4j}(sqrt(2 pi) n) = theta3(1) 4^{2j} Phi^j d(j)
// and compares with the exact table value.
OracleVerdict hermite_oracle_d(int j, const DTable& dtable, mpfr_prec_t precision);

// For odd k the same sum with H_{2k} vanishes; checks it is numerically zero.
OracleVerdict hermite_odd_oracle(int k, mpfr_prec_t precision);

// Power-sum identity:
//   sum_{n in Z} n^{2k} e^{-pi n^2}
//     = pi^{1/4}/Gamma(3/4) * (4 pi)^{-k} * sum_j coeff_j d(j) Omega^j
// with the same coefficients as theta_deriv_coeffs(k).  (0^0 = 1 for k=0.)
OracleVerdict power_sum_oracle(int k, const DTable& dtable, mpfr_prec_t precision);

// Term-wise theta3^(n)(1) against the Omega-polynomial closed form.
OracleVerdict deriv_oracle(int n, const DTable& dtable, mpfr_prec_t precision);

// Generating-function identity at a rational point 0 < t < 1/4:
//   sum_{n=0}^{N} d(n)/(2^n (2n)!) t^n U(t)^{2n} = V(t),
// U = 2F1(3/4,3/4;3/2;4t)/2F1(1/4,1/4;1/2;4t), V = sqrt(2F1(1/4,1/4;1/2;4t)).
// Needs d(N+1) for the tail estimate, so requires dtable.n_max >= N+1.
OracleVerdict genfun_oracle(const Rat& t, int N, const DTable& dtable,
                            mpfr_prec_t precision);

// Taylor expansion of sigma3:
//   sigma3(z) = theta3(1) sum_n d(n)/(2n)! Phi^n z^{2n},
// partial sum through N against the direct evaluation.  Requires
// dtable.n_max >= N+1 for the tail estimate.
OracleVerdict sigma_taylor_oracle(const BigFloat& z, int N, const DTable& dtable,
                                  mpfr_prec_t precision);

}  // namespace thetad
