#pragma once

#include <utility>
#include <vector>

#include "thetad/numbers.hpp"
#include "thetad/series.hpp"

namespace thetad {

// The integer sequence d(n) together with the auxiliary sequences that
// produce it:
//
//   u(n) = (2n+1)! [t^n] U(t),  U = 2F1(3/4,3/4;3/2;4t) / 2F1(1/4,1/4;1/2;4t)
//   v(n) = 2^n (2n)! [t^n] V(t),  V = sqrt(2F1(1/4,1/4;1/2;4t))
//   r(n,k) = 2^{n-k} (2n)!/(2k)! [t^{n-k}] U(t)^{2k}
//   d(n) = v(n) - sum_{k=1}^{n-1} r(n,k) d(k),  d(0) = 1
//
// All entries are exact integers; the evaluation never leaves integer
// arithmetic (every division along the way is checked to be exact).
struct DTable {
    int n_max = 0;
    std::vector<BigInt> d;  // d(0..n_max)
    std::vector<BigInt> u;  // u(0..n_max)
    std::vector<BigInt> v;  // v(0..n_max)

    // r[n] holds r(n,0..n) for 1 <= n <= n_max, with the convention
    // r(n,0) = 0; r[0] is empty.  r(n,n) = 1 always.
    std::vector<std::vector<BigInt>> r;

    // r(n,k) for 0 <= k <= n <= n_max, n >= 1.
    const BigInt& r_at(int n, int k) const;
};

// u(0..n_max) via the recurrence
//   u(n) = (3*7*...*(4n-1))^2
//          - sum_{m=0}^{n-1} C(2n+1,2m+1) (1*5*...*(4(n-m)-3))^2 u(m).
std::vector<BigInt> compute_u(int n_max);

// v(0..n_max) via the symmetrized recurrence
//   v(n) = 2^{n-1} (1*5*...*(4n-3))^2
//          - sum_{1<=m, 2m<n} C(2n,2m) v(m) v(n-m)
//          - [n even] (C(2n,n)/2) v(n/2)^2,
// which keeps every intermediate an integer (C(2n,n) is even for n >= 1).
std::vector<BigInt> compute_v(int n_max);

// The triangular array r(n,k), 1 <= k <= n <= n_max, built from the exact
// U series by incremental even powers U^{2k} = U^{2(k-1)} * U^2, carried out
// entirely on the integer rescaling r(n,k) (see compute_r in sequences.cpp).
// Requires n_max >= 1.
std::vector<std::vector<BigInt>> compute_r(int n_max);

// The full table d(0..n_max) plus the u, v, r values that produced it.
DTable compute_d(int n_max);

// The polynomial-in-Omega representation of the n-th derivative of theta3
// at x = 1:
//
//   theta3^(n)(1) = theta3(1) * (-1)^n / 4^n * sum_k coeff_k Omega^k,
//   coeff_k = (2n)! / (2^{n-2k} (4k)! (n-2k)!) * d(k),  0 <= k <= n/2.
struct ThetaDerivCoeffs {
    int n = 0;
    std::vector<std::pair<int, Rat>> terms;  // (k, coeff_k)
};

// Throws InsufficientTable if floor(n/2) > dtable.n_max.
ThetaDerivCoeffs theta_deriv_coeffs(int n, const DTable& dtable);

// The rescaled centered theta series sigma_hat(z) = sum d(n)/(2n)! z^{2n}
// as a truncated series of order 2*n_max (odd coefficients zero).
// Throws InsufficientTable if n_max > dtable.n_max.
Series sigma_hat_series(int n_max, const DTable& dtable);

}  // namespace thetad
