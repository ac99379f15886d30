#include "thetad/sequences.hpp"

#include <stdexcept>

#include "thetad/errors.hpp"

namespace thetad {

namespace {

// Rows of even-index binomials C(2n, .) for n = 1..n_max, indexed by n.
// compute_r and compute_v both consume whole rows, so building each row
// incrementally is cheaper than per-entry binomial calls.
std::vector<std::vector<BigInt>> even_binomial_rows(int n_max) {
    std::vector<std::vector<BigInt>> rows((size_t)n_max + 1);
    for (int n = 1; n <= n_max; ++n) {
        rows[(size_t)n] = binomial_row(2 * (unsigned long)n);
    }
    return rows;
}

// r(n,k) for 1 <= k <= n <= n_max given u(0..n_max-1).
//
// Instead of manipulating the rational series U^{2k} directly, work on the
// integer rescaling r(n,k) = 2^{n-k} (2n)!/(2k)! [t^{n-k}] U^{2k}.  The
// incremental step U^{2k} = U^{2(k-1)} * U^2, rewritten on the rescaled
// entries, becomes
//
//   r(k+j, k) = [ sum_{i=0}^{j} C(2k+2j, 2(j-i)+2) r(k-1+i, k-1) r(j-i+1, 1) ]
//               / ( k (2k-1) ),
//
// an exact division for every k, j.  The base column is the Cauchy square
// of U itself:
//
//   r(j+1, 1) = 2^{j-1} sum_{a=0}^{j} C(2j+2, 2a+1) u(a) u(j-a)
//
// (for j = 0 the factor 2^{-1} cancels against an even sum).  Everything
// stays in BigInt; divide_exact turns any non-exact division into a hard
// IntegralityError.
std::vector<std::vector<BigInt>> compute_r_from_u(int n_max,
                                                  const std::vector<BigInt>& u) {
    std::vector<std::vector<BigInt>> crow = even_binomial_rows(n_max);

    // col[k][j] = r(k+j, k)
    std::vector<std::vector<BigInt>> col((size_t)n_max + 1);

    col[1].resize((size_t)n_max);
    for (int j = 0; j < n_max; ++j) {
        const std::vector<BigInt>& row = crow[(size_t)(j + 1)];  // C(2j+2, .)
        BigInt s = 0;
        for (int a = 0; a <= j; ++a) {
            s += row[(size_t)(2 * a + 1)] * u[(size_t)a] * u[(size_t)(j - a)];
        }
        if (j == 0) {
            col[1][0] = divide_exact(s, BigInt(2), "compute_r base column");
        } else {
            col[1][(size_t)j] = s << (unsigned long)(j - 1);
        }
    }

    for (int k = 2; k <= n_max; ++k) {
        col[(size_t)k].resize((size_t)(n_max - k + 1));
        const BigInt den = BigInt(k) * (2 * k - 1);
        for (int j = 0; j + k <= n_max; ++j) {
            const std::vector<BigInt>& row = crow[(size_t)(k + j)];  // C(2k+2j, .)
            BigInt s = 0;
            for (int i = 0; i <= j; ++i) {
                s += row[(size_t)(2 * (j - i) + 2)] * col[(size_t)(k - 1)][(size_t)i] *
                     col[1][(size_t)(j - i)];
            }
            col[(size_t)k][(size_t)j] = divide_exact(s, den, "compute_r column step");
        }
    }

    // Transpose columns into rows r[n] = (0, r(n,1), ..., r(n,n)).
    std::vector<std::vector<BigInt>> r((size_t)n_max + 1);
    for (int n = 1; n <= n_max; ++n) {
        r[(size_t)n].resize((size_t)n + 1);
        r[(size_t)n][0] = 0;
        for (int k = 1; k <= n; ++k) {
            r[(size_t)n][(size_t)k] = col[(size_t)k][(size_t)(n - k)];
        }
    }
    return r;
}

}  // namespace

const BigInt& DTable::r_at(int n, int k) const {
    if (n < 1 || n > n_max || k < 0 || k > n) {
        throw std::invalid_argument("DTable::r_at: index out of range");
    }
    return r[(size_t)n][(size_t)k];
}

std::vector<BigInt> compute_u(int n_max) {
    if (n_max < 0) {
        throw std::invalid_argument("compute_u: negative n_max");
    }
    std::vector<BigInt> u((size_t)n_max + 1);
    u[0] = 1;

    // A = 3*7*...*(4n-1); Bsq[m] = (1*5*...*(4m-3))^2, both grown as n advances.
    BigInt A = 1;
    std::vector<BigInt> Bsq((size_t)n_max + 1);
    Bsq[0] = 1;
    BigInt B = 1;
    for (int m = 1; m <= n_max; ++m) {
        B *= 4 * m - 3;
        Bsq[(size_t)m] = B * B;
    }

    for (int n = 1; n <= n_max; ++n) {
        A *= 4 * n - 1;
        std::vector<BigInt> row = binomial_row(2 * (unsigned long)n + 1);
        BigInt s = A * A;
        for (int m = 0; m < n; ++m) {
            s -= row[(size_t)(2 * m + 1)] * Bsq[(size_t)(n - m)] * u[(size_t)m];
        }
        u[(size_t)n] = s;
    }
    return u;
}

std::vector<BigInt> compute_v(int n_max) {
    if (n_max < 0) {
        throw std::invalid_argument("compute_v: negative n_max");
    }
    std::vector<BigInt> v((size_t)n_max + 1);
    v[0] = 1;

    BigInt B = 1;  // 1*5*...*(4n-3)
    for (int n = 1; n <= n_max; ++n) {
        B *= 4 * n - 3;
        BigInt s = (B * B) << (unsigned long)(n - 1);
        std::vector<BigInt> row = binomial_row(2 * (unsigned long)n);
        for (int m = 1; 2 * m < n; ++m) {
            s -= row[(size_t)(2 * m)] * v[(size_t)m] * v[(size_t)(n - m)];
        }
        if (n % 2 == 0) {
            // Central term: C(2n,n) is even for n >= 1, so the halved
            // coefficient is still an integer.
            BigInt half = divide_exact(row[(size_t)n], BigInt(2), "compute_v central term");
            s -= half * v[(size_t)(n / 2)] * v[(size_t)(n / 2)];
        }
        v[(size_t)n] = s;
    }
    return v;
}

std::vector<std::vector<BigInt>> compute_r(int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("compute_r: n_max must be >= 1");
    }
    return compute_r_from_u(n_max, compute_u(n_max - 1));
}

DTable compute_d(int n_max) {
    if (n_max < 0) {
        throw std::invalid_argument("compute_d: negative n_max");
    }
    DTable t;
    t.n_max = n_max;
    t.u = compute_u(n_max);
    t.v = compute_v(n_max);
    if (n_max >= 1) {
        t.r = compute_r_from_u(n_max, t.u);
    } else {
        t.r.resize(1);
    }

    t.d.resize((size_t)n_max + 1);
    t.d[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        BigInt s = t.v[(size_t)n];
        for (int k = 1; k < n; ++k) {
            s -= t.r[(size_t)n][(size_t)k] * t.d[(size_t)k];
        }
        t.d[(size_t)n] = s;
    }
    return t;
}

ThetaDerivCoeffs theta_deriv_coeffs(int n, const DTable& dtable) {
    if (n < 0) {
        throw std::invalid_argument("theta_deriv_coeffs: negative n");
    }
    if (n / 2 > dtable.n_max) {
        throw InsufficientTable(n / 2, dtable.n_max);
    }
    ThetaDerivCoeffs out;
    out.n = n;
    const BigInt f2n = factorial(2 * (unsigned long)n);
    for (int k = 0; 2 * k <= n; ++k) {
        BigInt den = factorial(4 * (unsigned long)k) *
                     factorial((unsigned long)(n - 2 * k));
        den <<= (unsigned long)(n - 2 * k);
        out.terms.emplace_back(k, make_rat(f2n * dtable.d[(size_t)k], den));
    }
    return out;
}

Series sigma_hat_series(int n_max, const DTable& dtable) {
    if (n_max < 0) {
        throw std::invalid_argument("sigma_hat_series: negative n_max");
    }
    if (n_max > dtable.n_max) {
        throw InsufficientTable(n_max, dtable.n_max);
    }
    Series s(2 * n_max);
    for (int n = 0; n <= n_max; ++n) {
        s.set_coeff(2 * n, make_rat(dtable.d[(size_t)n], factorial(2 * (unsigned long)n)));
    }
    return s;
}

}  // namespace thetad
