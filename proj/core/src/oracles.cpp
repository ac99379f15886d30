#include "thetad/oracles.hpp"

#include <stdexcept>
#include <utility>

#include "thetad/errors.hpp"
#include "thetad/hermite.hpp"
#include "thetad/theta.hpp"

namespace thetad {

namespace {

constexpr mpfr_prec_t kGuard = 32;

OracleVerdict finish(std::string quantity, std::optional<Rat> exact,
                     BigFloat oracle, BigFloat abs_error, BigFloat tolerance) {
    const bool pass = abs_error <= tolerance;
    return OracleVerdict{std::move(quantity), std::move(exact), std::move(oracle),
                         std::move(abs_error), std::move(tolerance), pass};
}

// The rounding floor 2^{-(precision-48)} scaled by the computation's largest
// intermediate magnitude.
BigFloat rounding_floor(mpfr_prec_t precision, const BigFloat& scale) {
    BigFloat floor = BigFloat::pow2(-(long)precision + 48, scale.precision());
    const BigFloat one = BigFloat::of(1, scale.precision());
    return abs(scale) > one ? floor * abs(scale) : floor;
}

// S = H_m(0) + 2 sum_{n>=1} e^{-pi n^2} H_m(sqrt(2 pi) n), the two-sided
// Hermite sum.  max_term reports the largest |term| seen (the scale of the
// cancellation, needed for an honest tolerance).
BigFloat hermite_sum(int m, mpfr_prec_t wp, const BigFloat& threshold,
                     BigFloat* max_term) {
    const HermitePoly H = hermite(m);
    const BigFloat pi = BigFloat::pi(wp);
    const BigFloat q = exp(-pi);
    const BigFloat sq2pi = sqrt(ldexp(pi, 1));

    BigFloat acc = BigFloat::of(H.coeffs[0], wp);  // H_m(0)
    BigFloat biggest = abs(acc);
    const BigFloat q2 = q * q;
    BigFloat qm = q;
    BigFloat odd = q * q2;
    int below = 0;
    for (long n = 1;; ++n) {
        const BigFloat t = qm * hermite_eval(H, sq2pi * n);
        acc += ldexp(t, 1);
        const BigFloat at = abs(t);
        if (at > biggest) {
            biggest = at;
        }
        // Two-consecutive rule: H_m oscillates, so a single small term can
        // be a near-root rather than true decay.
        if (at < threshold) {
            if (++below >= 2) {
                break;
            }
        } else {
            below = 0;
        }
        qm *= odd;
        odd *= q2;
    }
    if (max_term != nullptr) {
        *max_term = biggest;
    }
    return acc;
}

}  // namespace

OracleVerdict hermite_oracle_d(int j, const DTable& dtable, mpfr_prec_t precision) {
    if (j < 0) {
        throw std::invalid_argument("hermite_oracle_d: negative index");
    }
    if (j > dtable.n_max) {
        throw InsufficientTable(j, dtable.n_max);
    }
    const mpfr_prec_t wp = precision + 2 * kGuard;
    const BigFloat threshold = BigFloat::pow2(-(long)(precision + kGuard), 64);

    BigFloat max_term(wp);
    const BigFloat S = hermite_sum(4 * j, wp, threshold, &max_term);

    const BigFloat t31 = theta3(BigFloat::of(1, wp), wp);
    const BigFloat phi = ldexp(BigFloat::pi(wp) * BigFloat::pi(wp) * pow_ui(t31, 8), -3);
    // denom = theta3(1) * 4^{2j} * Phi^j
    const BigFloat denom = ldexp(t31 * pow_ui(phi, (unsigned long)j), 4 * j);

    const BigFloat oracle = S / denom;
    const Rat exact = Rat(dtable.d[(size_t)j]);
    const BigFloat err = abs(oracle - BigFloat::of(exact, wp));
    const BigFloat tol = rounding_floor(precision, max_term / denom);
    return finish("hermite j=" + std::to_string(j), exact, oracle, err, tol);
}

OracleVerdict hermite_odd_oracle(int k, mpfr_prec_t precision) {
    if (k < 1 || k % 2 == 0) {
        throw std::invalid_argument("hermite_odd_oracle: k must be odd and positive");
    }
    const mpfr_prec_t wp = precision + 2 * kGuard;
    const BigFloat threshold = BigFloat::pow2(-(long)(precision + kGuard), 64);

    BigFloat max_term(wp);
    const BigFloat S = hermite_sum(2 * k, wp, threshold, &max_term);
    const BigFloat err = abs(S);
    const BigFloat tol = rounding_floor(precision, max_term);
    return finish("hermite-odd k=" + std::to_string(k), Rat(0), S, err, tol);
}

OracleVerdict power_sum_oracle(int k, const DTable& dtable, mpfr_prec_t precision) {
    if (k < 0) {
        throw std::invalid_argument("power_sum_oracle: negative k");
    }
    const mpfr_prec_t wp = precision + 2 * kGuard;
    const BigFloat threshold = BigFloat::pow2(-(long)(precision + kGuard), 64);

    // LHS = sum_{n in Z} n^{2k} e^{-pi n^2}; the n=0 term is 1 for k=0
    // (0^0 = 1) and 0 otherwise.
    const BigFloat pi = BigFloat::pi(wp);
    const BigFloat q = exp(-pi);
    const BigFloat q2 = q * q;
    BigFloat qm = q;
    BigFloat odd = q * q2;
    BigFloat lhs = k == 0 ? BigFloat::of(1, wp) : BigFloat(wp);
    int below = 0;
    for (unsigned long n = 1;; ++n) {
        BigInt np;
        mpz_ui_pow_ui(np.get_mpz_t(), n, 2 * (unsigned long)k);
        const BigFloat t = qm * np;
        lhs += ldexp(t, 1);
        if (t < threshold) {
            if (++below >= 2) {
                break;
            }
        } else {
            below = 0;
        }
        qm *= odd;
        odd *= q2;
    }

    // RHS = pi^{1/4}/Gamma(3/4) * (4 pi)^{-k} * sum_j coeff_j Omega^j, with
    // Gamma(3/4) = pi sqrt(2) / Gamma(1/4) by the reflection formula.
    const Constants C = constants(wp);
    const BigFloat gamma34 = pi * sqrt(BigFloat::of(2, wp)) / C.gamma_quarter;
    const BigFloat pref = pow(pi, BigFloat::of(make_rat(1, 4), wp)) / gamma34;
    const ThetaDerivCoeffs tc = theta_deriv_coeffs(k, dtable);
    BigFloat poly(wp);
    for (const auto& [idx, coeff] : tc.terms) {
        poly += BigFloat::of(coeff, wp) * pow_ui(C.omega, (unsigned long)idx);
    }
    const BigFloat rhs = pref * poly / pow_ui(ldexp(pi, 2), (unsigned long)k);

    const BigFloat err = abs(lhs - rhs);
    const BigFloat scale = abs(lhs) > abs(rhs) ? abs(lhs) : abs(rhs);
    const BigFloat tol = rounding_floor(precision, scale);
    return finish("power-sum k=" + std::to_string(k), std::nullopt, rhs, err, tol);
}

OracleVerdict deriv_oracle(int n, const DTable& dtable, mpfr_prec_t precision) {
    if (n < 0) {
        throw std::invalid_argument("deriv_oracle: negative order");
    }
    const mpfr_prec_t wp = precision + kGuard;
    const BigFloat lhs = theta3_deriv(n, wp);

    const Constants C = constants(wp);
    const ThetaDerivCoeffs tc = theta_deriv_coeffs(n, dtable);
    BigFloat poly(wp);
    for (const auto& [idx, coeff] : tc.terms) {
        poly += BigFloat::of(coeff, wp) * pow_ui(C.omega, (unsigned long)idx);
    }
    BigFloat rhs = ldexp(C.theta3_1 * poly, -2 * n);  // theta3(1)/4^n * poly
    if (n % 2 != 0) {
        rhs = -rhs;
    }

    const BigFloat err = abs(lhs - rhs);
    const BigFloat scale = abs(lhs) > abs(rhs) ? abs(lhs) : abs(rhs);
    // Contract tolerance: relative 2^{-precision/2}.
    const BigFloat tol = BigFloat::pow2(-(long)(precision / 2), wp) * scale;
    return finish("derivs n=" + std::to_string(n), std::nullopt, rhs, err, tol);
}

OracleVerdict genfun_oracle(const Rat& t, int N, const DTable& dtable,
                            mpfr_prec_t precision) {
    if (!(t > 0 && t < make_rat(1, 4))) {
        throw std::domain_error("genfun_oracle: t must lie in (0, 1/4)");
    }
    if (N < 0) {
        throw std::invalid_argument("genfun_oracle: negative N");
    }
    if (N + 1 > dtable.n_max) {
        // d(N+1) is needed for the first-omitted-term tail estimate.
        throw InsufficientTable(N + 1, dtable.n_max);
    }
    const mpfr_prec_t wp = precision + kGuard;

    const Rat quarter = make_rat(1, 4);
    const Rat half = make_rat(1, 2);
    const Rat three_quarters = make_rat(3, 4);
    const Rat three_halves = make_rat(3, 2);
    const BigFloat x4t = BigFloat::of(Rat(4) * t, wp);
    const BigFloat F1 = hyp2f1_value(quarter, quarter, half, x4t, wp);
    const BigFloat F2 = hyp2f1_value(three_quarters, three_quarters, three_halves, x4t, wp);
    const BigFloat U = F2 / F1;
    const BigFloat V = sqrt(F1);

    // S = sum_{n<=N} d(n)/(2^n (2n)!) (t U^2)^n
    const BigFloat g = BigFloat::of(t, wp) * U * U;
    BigFloat gp = BigFloat::of(1, wp);
    BigFloat S(wp);
    BigFloat term(wp);
    for (int n = 0; n <= N + 1; ++n) {
        BigInt den = factorial(2 * (unsigned long)n);
        den <<= (unsigned long)n;
        term = BigFloat::of(make_rat(dtable.d[(size_t)n], den), wp) * gp;
        if (n <= N) {
            S += term;
        }
        gp *= g;
    }
    // term now holds the first omitted term (n = N+1); the observed remainder
    // sits within a small multiple of it, 4x is a safe envelope.
    const BigFloat tail = ldexp(abs(term), 2);

    const BigFloat err = abs(S - V);
    BigFloat tol = rounding_floor(precision, BigFloat::of(1, wp));
    if (tail > tol) {
        tol = tail;
    }
    return finish("genfun t=" + t.get_str() + " N=" + std::to_string(N),
                  std::nullopt, S, err, tol);
}

OracleVerdict sigma_taylor_oracle(const BigFloat& z, int N, const DTable& dtable,
                                  mpfr_prec_t precision) {
    if (N < 0) {
        throw std::invalid_argument("sigma_taylor_oracle: negative N");
    }
    if (N + 1 > dtable.n_max) {
        throw InsufficientTable(N + 1, dtable.n_max);
    }
    const mpfr_prec_t wp = precision + kGuard;
    const BigFloat zz = z.to_precision(wp);
    if (!(abs(zz) < BigFloat::of(1, wp))) {
        throw std::domain_error("sigma_taylor_oracle: |z| must be < 1");
    }

    const BigFloat t31 = theta3(BigFloat::of(1, wp), wp);
    const BigFloat phi = ldexp(BigFloat::pi(wp) * BigFloat::pi(wp) * pow_ui(t31, 8), -3);

    const BigFloat w = zz * zz;
    BigFloat phipow = BigFloat::of(1, wp);  // Phi^n
    BigFloat wpow = BigFloat::of(1, wp);    // z^{2n}
    BigFloat S(wp);
    BigFloat term(wp);
    for (int n = 0; n <= N + 1; ++n) {
        term = BigFloat::of(make_rat(dtable.d[(size_t)n], factorial(2 * (unsigned long)n)), wp) *
               phipow * wpow;
        if (n <= N) {
            S += term;
        }
        phipow *= phi;
        wpow *= w;
    }
    const BigFloat lhs = t31 * S;
    const BigFloat rhs = sigma3(zz, wp);
    const BigFloat tail = ldexp(abs(t31 * term), 2);

    const BigFloat err = abs(lhs - rhs);
    BigFloat tol = rounding_floor(precision, BigFloat::of(1, wp));
    if (tail > tol) {
        tol = tail;
    }
    return finish("sigma z=" + zz.to_precision(64).str(6) + " N=" + std::to_string(N),
                  std::nullopt, lhs, err, tol);
}

}  // namespace thetad
