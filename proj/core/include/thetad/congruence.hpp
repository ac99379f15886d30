#pragma once

#include <optional>
#include <vector>

#include "thetad/sequences.hpp"

namespace thetad {

// Empirical classification of a residue stream d(n) mod m.  d(0) = 1 is
// excluded from pattern matching (periodicity is tested from n = 1), but
// residues[0] is still recorded for transparency.  All classifications are
// evidence within the window, never proofs.
struct CongruenceReport {
    unsigned long modulus = 0;
    std::vector<unsigned long> residues;  // d(n) mod m for n = 0..window

    enum class Kind { PeriodicFrom1, FiniteSupport, Inconclusive };
    Kind classification = Kind::Inconclusive;

    std::optional<int> period;        // minimal period, when periodic
    std::optional<int> period_start;  // always 1 when periodic
    std::optional<int> last_nonzero;  // when finite support
    int window = 0;                   // n_max scanned
};

// Nonnegative residues d(n) mod m for n = 0..dtable.n_max; m >= 2.
std::vector<unsigned long> residue_stream(const DTable& dtable, unsigned long m);

// Scans candidate periods p = 1..window/3 (start index 1) for the minimal
// exact period; failing that, declares finite support when the zero tail
// has length >= window/3; otherwise inconclusive.
// Throws WindowTooSmall if fewer than 16 residues are given.
CongruenceReport detect_pattern(const std::vector<unsigned long>& residues,
                                unsigned long modulus);

// Reports for the six reference moduli {3, 5, 7, 11, 13, 17} plus any
// extras.  Requires dtable.n_max >= 100.
std::vector<CongruenceReport> conjecture_suite(
    const DTable& dtable, const std::vector<unsigned long>& extra_moduli = {});

}  // namespace thetad
