#include "thetad/congruence.hpp"

#include <stdexcept>

#include "thetad/errors.hpp"

namespace thetad {

std::vector<unsigned long> residue_stream(const DTable& dtable, unsigned long m) {
    if (m < 2) {
        throw std::invalid_argument("residue_stream: modulus must be >= 2");
    }
    std::vector<unsigned long> res;
    res.reserve(dtable.d.size());
    for (const BigInt& v : dtable.d) {
        res.push_back(mpz_fdiv_ui(v.get_mpz_t(), m));
    }
    return res;
}

CongruenceReport detect_pattern(const std::vector<unsigned long>& residues,
                                unsigned long modulus) {
    if (residues.size() < 16) {
        throw WindowTooSmall((int)residues.size());
    }
    CongruenceReport rep;
    rep.modulus = modulus;
    rep.residues = residues;
    rep.window = (int)residues.size() - 1;

    const int window = rep.window;
    const int cap = window / 3;

    // Minimal period first: smallest p such that residues[n] = residues[n+p]
    // for all n in [1, window-p].  Index 0 is excluded by convention.
    for (int p = 1; p <= cap; ++p) {
        bool fits = true;
        for (int n = 1; n + p <= window; ++n) {
            if (residues[(size_t)n] != residues[(size_t)(n + p)]) {
                fits = false;
                break;
            }
        }
        if (fits) {
            rep.classification = CongruenceReport::Kind::PeriodicFrom1;
            rep.period = p;
            rep.period_start = 1;
            return rep;
        }
    }

    int last_nonzero = -1;
    for (int n = window; n >= 0; --n) {
        if (residues[(size_t)n] != 0) {
            last_nonzero = n;
            break;
        }
    }
    if (last_nonzero >= 0 && window - last_nonzero >= cap) {
        rep.classification = CongruenceReport::Kind::FiniteSupport;
        rep.last_nonzero = last_nonzero;
        return rep;
    }

    rep.classification = CongruenceReport::Kind::Inconclusive;
    return rep;
}

std::vector<CongruenceReport> conjecture_suite(
    const DTable& dtable, const std::vector<unsigned long>& extra_moduli) {
    if (dtable.n_max < 100) {
        throw std::invalid_argument("conjecture_suite: needs a d-table with n_max >= 100");
    }
    std::vector<unsigned long> moduli{3, 5, 7, 11, 13, 17};
    moduli.insert(moduli.end(), extra_moduli.begin(), extra_moduli.end());

    std::vector<CongruenceReport> out;
    out.reserve(moduli.size());
    for (unsigned long m : moduli) {
        out.push_back(detect_pattern(residue_stream(dtable, m), m));
    }
    return out;
}

}  // namespace thetad
