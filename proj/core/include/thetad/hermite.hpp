#pragma once

#include <vector>

#include "thetad/bigfloat.hpp"
#include "thetad/numbers.hpp"

namespace thetad {

// Physicists' Hermite polynomial H_m, exact integer coefficients:
// H_0 = 1, H_1 = 2x, H_{m+1} = 2x H_m - 2m H_{m-1}.
struct HermitePoly {
    int m = 0;                    // degree
    std::vector<BigInt> coeffs;   // coeffs[i] multiplies x^i; size m+1
};

HermitePoly hermite(int m);

// Horner evaluation with BigFloat arithmetic at the precision of x.
BigFloat hermite_eval(const HermitePoly& h, const BigFloat& x);

}  // namespace thetad
