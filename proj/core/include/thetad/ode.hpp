#pragma once

#include <vector>

#include "thetad/bigfloat.hpp"
#include "thetad/sequences.hpp"
#include "thetad/series.hpp"

namespace thetad {

// Exact series residual of the constant-free ODE satisfied by
// y = sigma_hat(z) = sum d(n)/(2n)! z^{2n}:
//
//   (y^2 y''' - 15 y y' y'' + 30 y'^3)^2 + 32 (y y'' - 3 y'^2)^3
//     = 32 y^10 (y y'' - 3 y'^2)^2.
//
// With inputs truncated at order M, products and derivatives only determine
// the residual reliably through valid_order = M - 6 (third derivatives shift
// the coefficient dependence by up to 3 orders per factor; 6 is a safe
// margin).  residual_coeffs holds orders 0..valid_order and must be exactly
// zero for a correct d-table.
struct OdeResidual {
    int truncation_order = 0;         // M
    int valid_order = 0;              // M - 6
    std::vector<Rat> residual_coeffs;

    bool all_zero() const;
    // Smallest order with a nonzero coefficient, or -1 if none.
    int first_nonzero() const;
};

// Throws InsufficientTable if M > 2*dtable.n_max; requires M >= 6.
OdeResidual sigma_hat_ode_residual(const DTable& dtable, int M);

// Residual of the same differential polynomial on an arbitrary truncated
// series (used for degenerate-solution and perturbation checks).
OdeResidual series_ode_residual(const Series& y, const Rat& rhs_constant);

// Pointwise residual |LHS - RHS| together with max(|LHS|, |RHS|), the scale
// against which a relative tolerance makes sense.
struct PointResidual {
    BigFloat residual;
    BigFloat scale;
};

// theta3 satisfies (y^2y''' - 15yy'y'' + 30y'^3)^2 + 32(yy''-3y'^2)^3
//   = pi^2 y^10 (yy''-3y'^2)^2, with y = theta3(x); derivatives come from
// term-wise differentiation of the defining series (never finite
// differences).  Throws std::domain_error if x <= 0.
PointResidual theta_ode_point(const BigFloat& x, mpfr_prec_t precision);

// sigma3 satisfies the same equation with RHS constant 4 pi^2; derivatives
// come from the Phi-series with a table sized for the target tolerance
// (supply dtable to reuse one, otherwise it is computed internally).
// Throws std::domain_error if |z| >= 1.
PointResidual sigma_ode_point(const BigFloat& z, mpfr_prec_t precision,
                              const DTable* dtable = nullptr);

// Contract entry points returning just the residual.  h is reserved for an
// optional finite-difference mode and is unused by the analytic path.
BigFloat theta_ode_residual(const BigFloat& x, const BigFloat& h, mpfr_prec_t precision);
BigFloat sigma_ode_residual(const BigFloat& z, mpfr_prec_t precision);

}  // namespace thetad
