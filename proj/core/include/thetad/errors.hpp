#pragma once

#include <stdexcept>
#include <string>

namespace thetad {

// Division by a power series whose constant term vanishes.
struct ZeroConstantTerm : std::domain_error {
    ZeroConstantTerm()
        : std::domain_error("series division: divisor has zero constant term") {}
};

// A coefficient beyond the truncation order of a series was requested.
struct OrderExceeded : std::out_of_range {
    OrderExceeded(int j, int order)
        : std::out_of_range("series coefficient index " + std::to_string(j) +
                            " exceeds truncation order " + std::to_string(order)) {}
};

// 2F1(a,b;c;x) with c a nonpositive integer: the term recurrence divides by
// zero at n = -c.
struct PoleInC : std::domain_error {
    explicit PoleInC(const std::string& c)
        : std::domain_error("hypergeometric series: lower parameter c = " + c +
                            " is a nonpositive integer") {}
};

// An iterative numeric evaluation failed to reach its stopping criterion.
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what_arg)
        : std::runtime_error("no convergence: " + what_arg) {}
};

// An operation needed sequence values beyond the precomputed table.
struct InsufficientTable : std::invalid_argument {
    InsufficientTable(int needed, int have)
        : std::invalid_argument("d-table holds n <= " + std::to_string(have) +
                                " but n <= " + std::to_string(needed) +
                                " is required") {}
};

// A congruence scan window too short to support any classification.
struct WindowTooSmall : std::invalid_argument {
    explicit WindowTooSmall(int window)
        : std::invalid_argument("congruence window " + std::to_string(window) +
                                " is too small to classify a pattern") {}
};

// An exact division inside an integer recurrence left a remainder.  The
// recurrences used here are provably integral, so this can only mean a bug
// (or corrupted inputs); it is a logic error, not a recoverable condition.
struct IntegralityError : std::logic_error {
    explicit IntegralityError(const std::string& where)
        : std::logic_error("exact division failed in " + where +
                           ": result is not an integer") {}
};

}  // namespace thetad
