#pragma once
// Reference values and independent recomputation routes shared by the unit
// suites and the acceptance runner.  Everything here is either a frozen
// reference table or a second derivation path that does not share code with
// the implementation it checks.

#include <stdexcept>
#include <string>
#include <vector>

#include "thetad/numbers.hpp"
#include "thetad/series.hpp"

namespace fixtures {

// d(0..20).
inline const std::vector<std::string> kTable1 = {
    "1",
    "1",
    "-1",
    "51",
    "849",
    "-26199",
    "1341999",
    "82018251",
    "18703396449",
    "-993278479599",
    "-78795859032801",
    "38711746282537251",
    "-923351332174412751",
    "4688204953344642495801",
    "501271295036889289819599",
    "-89944302490128540556106949",
    "-104694993963067299023875442751",
    "63396004159664562363095882996001",
    "-10788308985765935467659682700676801",
    "8534133600987639916144760846045541651",
    "16747176493521483129100021404620455570449",
};

inline const char* kD26 =
    "-991924162819304186333096649545124791055039947326950020001";

// The 5x5 corner of the triangular array r(n,k).  r(4,1)=2515968 is the value
// consistent with d(4)=849 through the d-recurrence (and with the exact
// series definition of r).
struct REntry {
    int n;
    int k;
    long value;
};
inline const std::vector<REntry> kRMatrix = {
    {1, 1, 1},
    {2, 1, 48},         {2, 2, 1},
    {3, 1, 7584},       {3, 2, 240},      {3, 3, 1},
    {4, 1, 2515968},    {4, 2, 97664},    {4, 3, 672},   {4, 4, 1},
    {5, 1, 1432498176}, {5, 2, 63221760}, {5, 3, 560448}, {5, 4, 1440}, {5, 5, 1},
};

// Conjectured residue patterns of d(n) for the six reference moduli.
// Periodic blocks repeat from n = 1; finite prefixes start at n = 0 and all
// later residues in the scanned window vanish.
struct PeriodicPattern {
    unsigned long modulus;
    std::vector<unsigned long> block;
};
struct FinitePattern {
    unsigned long modulus;
    std::vector<unsigned long> prefix;
};

inline const std::vector<PeriodicPattern> kPeriodic = {
    {5, {1, 4}},
    {13, {1, 12, 12, 4, 9, 9, 3, 10, 10, 12, 1, 1, 9, 4, 4, 10, 3, 3}},
    {17, {1, 16, 0, 16, 15, 2, 0, 2, 4, 13, 0, 13, 9, 8, 0, 8,
          16, 1, 0, 1, 2, 15, 0, 15, 13, 4, 0, 4, 8, 9, 0, 9}},
};

inline const std::vector<FinitePattern> kFinite = {
    {3, {1, 1, 2}},
    {7, {1, 1, 6, 2, 2, 2, 1, 0, 3, 0, 6, 0, 6}},
    {11, {1, 1, 10, 7, 2, 3, 10, 7, 1, 1, 2, 0, 6, 2, 0, 1, 5, 0,
          9, 9, 0, 1, 0, 0, 1, 0, 0, 8, 0, 0, 10}},
};

// Square root of a series with constant term 1, by forward substitution:
// s_0 = 1, s_n = (a_n - sum_{m=1}^{n-1} s_m s_{n-m}) / 2.
inline thetad::Series series_sqrt(const thetad::Series& a) {
    using thetad::Rat;
    if (a.coeff(0) != 1) {
        throw std::invalid_argument("series_sqrt: constant term must be 1");
    }
    const int order = a.order();
    thetad::Series s(order);
    s.set_coeff(0, Rat(1));
    for (int n = 1; n <= order; ++n) {
        Rat acc = a.coeff(n);
        for (int m = 1; m < n; ++m) {
            acc -= s.coeff(m) * s.coeff(n - m);
        }
        s.set_coeff(n, Rat(acc / 2));
    }
    return s;
}

inline thetad::Series f1_series(int order) {
    using thetad::make_rat;
    return thetad::hypergeometric_series(make_rat(1, 4), make_rat(1, 4),
                                         make_rat(1, 2), thetad::Rat(4), order);
}

inline thetad::Series f2_series(int order) {
    using thetad::make_rat;
    return thetad::hypergeometric_series(make_rat(3, 4), make_rat(3, 4),
                                         make_rat(3, 2), thetad::Rat(4), order);
}

// d(0..n_max) recovered order by order from the generating-function identity
//
//   V(t) = sum_n d(n) / (2^n (2n)!) t^n U(t)^{2n},
//   U = F2/F1, V = sqrt(F1),
//
// entirely in exact rational series arithmetic.  Independent of the integer
// recurrences behind compute_d.
inline std::vector<thetad::BigInt> d_via_genfun(int n_max) {
    using namespace thetad;
    const Series F1 = f1_series(n_max);
    const Series U = f2_series(n_max) / F1;
    const Series W = U * U;
    const Series V = series_sqrt(F1);

    std::vector<Series> wpow;  // W^m
    wpow.push_back(Series::one(n_max));
    for (int m = 1; m < n_max; ++m) {
        wpow.push_back(wpow.back() * W);
    }

    std::vector<BigInt> d;
    std::vector<Rat> dterm;  // d(m) / (2^m (2m)!)
    for (int n = 0; n <= n_max; ++n) {
        Rat acc = V.coeff(n);
        for (int m = 0; m < n; ++m) {
            acc -= dterm[(size_t)m] * wpow[(size_t)m].coeff(n - m);
        }
        BigInt scale = factorial(2 * (unsigned long)n);  // becomes 2^n (2n)!
        mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), (mp_bitcnt_t)n);
        const Rat val = acc * scale;
        if (!is_integer(val)) {
            throw std::logic_error("d_via_genfun: non-integer coefficient");
        }
        d.push_back(val.get_num());
        dterm.push_back(make_rat(d.back(), scale));
    }
    return d;
}

}  // namespace fixtures
