#include "thetad/theta.hpp"

#include <stdexcept>

#include "thetad/errors.hpp"

namespace thetad {

namespace {

// Guard bits added to the working precision so that accumulated rounding
// stays well below the series-truncation threshold.
constexpr mpfr_prec_t kGuard = 32;

}  // namespace

BigFloat theta3(const BigFloat& x, mpfr_prec_t precision) {
    if (x.sign() <= 0) {
        throw std::domain_error("theta3: x must be positive");
    }
    const mpfr_prec_t wp = precision + kGuard;
    const BigFloat threshold = BigFloat::pow2(-(long)(precision + kGuard), 64);

    // q = e^{-pi x}; the n-th term is q^{n^2}, maintained incrementally via
    // q^{(n+1)^2} = q^{n^2} * q^{2n+1}.
    const BigFloat q = exp(-(BigFloat::pi(wp) * x.to_precision(wp)));
    const BigFloat q2 = q * q;
    BigFloat term = q;       // q^{1}
    BigFloat odd = q * q2;   // q^{3}
    BigFloat acc(wp);
    while (true) {
        acc += term;
        term *= odd;
        odd *= q2;
        if (term < threshold) {
            break;
        }
    }
    return (BigFloat::of(1, wp) + ldexp(acc, 1)).to_precision(precision);
}

BigFloat theta3_deriv(int n, mpfr_prec_t precision) {
    if (n < 0) {
        throw std::invalid_argument("theta3_deriv: negative order");
    }
    if (n == 0) {
        return theta3(BigFloat::of(1, precision), precision);
    }
    const mpfr_prec_t wp = precision + 2 * kGuard;
    const BigFloat threshold = BigFloat::pow2(-(long)(precision + kGuard), 64);

    const BigFloat pi = BigFloat::pi(wp);
    const BigFloat q = exp(-pi);
    const BigFloat q2 = q * q;
    BigFloat qm = q;        // q^{m^2}
    BigFloat odd = q * q2;  // q^{2m+1}
    BigFloat acc(wp);       // sum of m^{2n} q^{m^2}
    int below = 0;
    for (unsigned long m = 1;; ++m) {
        BigInt mp;  // m^{2n}
        mpz_ui_pow_ui(mp.get_mpz_t(), m, 2 * (unsigned long)n);
        const BigFloat t = qm * mp;
        acc += t;
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
    BigFloat out = ldexp(pow_ui(pi, (unsigned long)n) * acc, 1);
    if (n % 2 != 0) {
        out = -out;
    }
    return out.to_precision(precision);
}

std::vector<BigFloat> theta3_derivs_at(const BigFloat& x, int j_max,
                                       mpfr_prec_t precision) {
    if (x.sign() <= 0) {
        throw std::domain_error("theta3_derivs_at: x must be positive");
    }
    if (j_max < 0) {
        throw std::invalid_argument("theta3_derivs_at: negative j_max");
    }
    const mpfr_prec_t wp = precision + 2 * kGuard;
    const BigFloat threshold = BigFloat::pow2(-(long)(precision + kGuard), 64);

    const BigFloat pi = BigFloat::pi(wp);
    const BigFloat q = exp(-(pi * x.to_precision(wp)));
    const BigFloat q2 = q * q;
    BigFloat qm = q;
    BigFloat odd = q * q2;
    std::vector<BigFloat> S((size_t)j_max + 1, BigFloat(wp));  // sum m^{2j} q^{m^2 x}
    int below = 0;
    for (unsigned long m = 1;; ++m) {
        const BigInt m2 = BigInt((long)m) * (long)m;
        BigInt mp = 1;  // m^{2j}
        BigFloat t(wp);
        for (int j = 0; j <= j_max; ++j) {
            t = qm * mp;
            S[(size_t)j] += t;
            mp *= m2;
        }
        // t is now the j_max term, the slowest to decay.
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

    std::vector<BigFloat> out;
    out.reserve((size_t)j_max + 1);
    for (int j = 0; j <= j_max; ++j) {
        BigFloat y = ldexp(j == 0 ? S[0] : pow_ui(pi, (unsigned long)j) * S[(size_t)j], 1);
        if (j == 0) {
            y = BigFloat::of(1, wp) + y;
        } else if (j % 2 != 0) {
            y = -y;
        }
        out.push_back(y.to_precision(precision));
    }
    return out;
}

Constants constants(mpfr_prec_t precision) {
    const mpfr_prec_t wp = precision + kGuard;
    const BigFloat t31 = theta3(BigFloat::of(1, wp), wp);
    const BigFloat pi = BigFloat::pi(wp);
    const BigFloat gamma_quarter =
        sqrt(BigFloat::of(2, wp)) * pow(pi, BigFloat::of(make_rat(3, 4), wp)) * t31;
    const BigFloat omega = ldexp(pi * pi * pow_ui(t31, 8), -1);

    // phi = omega/4 via an exact shift of the rounded omega, so the
    // omega == 4*phi invariant survives the final rounding.
    BigFloat omega_r = omega.to_precision(precision);
    BigFloat phi_r = ldexp(omega_r, -2);
    return Constants{precision, t31.to_precision(precision),
                     gamma_quarter.to_precision(precision), std::move(omega_r),
                     std::move(phi_r)};
}

BigFloat sigma3(const BigFloat& z, mpfr_prec_t precision) {
    const mpfr_prec_t wp = precision + kGuard;
    const BigFloat zz = z.to_precision(wp);
    const BigFloat one = BigFloat::of(1, wp);
    if (!(abs(zz) < one)) {
        throw std::domain_error("sigma3: |z| must be < 1");
    }
    const BigFloat x = (one - zz) / (one + zz);
    return (theta3(x, wp) / sqrt(one + zz)).to_precision(precision);
}

BigFloat hyp2f1_value(const Rat& a, const Rat& b, const Rat& c,
                      const BigFloat& x, mpfr_prec_t precision) {
    if (is_integer(c) && c <= 0) {
        throw PoleInC(c.get_str());
    }
    const mpfr_prec_t wp = precision + kGuard;
    const BigFloat xx = x.to_precision(wp);
    if (!(abs(xx) < BigFloat::of(1, wp))) {
        throw std::domain_error("hyp2f1_value: |x| must be < 1");
    }
    const BigFloat threshold = BigFloat::pow2(-(long)(precision + kGuard), 64);
    constexpr long kIterationCap = 100000;

    BigFloat term = BigFloat::of(1, wp);
    BigFloat acc = term;
    for (long n = 0; n < kIterationCap; ++n) {
        const Rat ratio = (a + n) * (b + n) / ((c + n) * Rat(n + 1));
        term = term * BigFloat::of(ratio, wp) * xx;
        acc += term;
        if (abs(term) < threshold) {
            return acc.to_precision(precision);
        }
    }
    throw NoConvergence("hyp2f1_value: terms did not fall below threshold");
}

}  // namespace thetad
