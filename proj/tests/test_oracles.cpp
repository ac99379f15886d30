#include <doctest.h>

#include <string>

#include "fixtures.hpp"
#include "thetad/errors.hpp"
#include "thetad/hermite.hpp"
#include "thetad/oracles.hpp"
#include "thetad/sequences.hpp"

using namespace thetad;

TEST_SUITE("oracles") {

TEST_CASE("hermite polynomial coefficients") {
    const HermitePoly h0 = hermite(0);
    REQUIRE(h0.coeffs.size() == 1);
    CHECK(h0.coeffs[0] == 1);

    const HermitePoly h1 = hermite(1);  // 2x
    CHECK(h1.coeffs[0] == 0);
    CHECK(h1.coeffs[1] == 2);

    const HermitePoly h2 = hermite(2);  // 4x^2 - 2
    CHECK(h2.coeffs[0] == -2);
    CHECK(h2.coeffs[1] == 0);
    CHECK(h2.coeffs[2] == 4);

    const HermitePoly h4 = hermite(4);  // 16x^4 - 48x^2 + 12
    CHECK(h4.coeffs[0] == 12);
    CHECK(h4.coeffs[2] == -48);
    CHECK(h4.coeffs[4] == 16);

    for (int m = 0; m <= 12; ++m) {
        const HermitePoly h = hermite(m);
        CHECK(h.m == m);
        REQUIRE((int)h.coeffs.size() == m + 1);
        // leading coefficient 2^m
        CHECK(h.coeffs[(size_t)m] == (BigInt(1) << (unsigned long)m));
        // parity: only every other coefficient is nonzero
        for (int i = m - 1; i >= 0; i -= 2) {
            CHECK(h.coeffs[(size_t)i] == 0);
        }
    }
}

TEST_CASE("hermite evaluation") {
    const mpfr_prec_t P = 128;
    // H_2(3/2) = 4 * 9/4 - 2 = 7, exact in binary
    const BigFloat x = BigFloat::of(make_rat(3, 2), P);
    CHECK(hermite_eval(hermite(2), x) == BigFloat::of(7L, P));
    // H_4(0) = 12
    CHECK(hermite_eval(hermite(4), BigFloat(P)) == BigFloat::of(12L, P));
}

TEST_CASE("hermite sum reconstructs d(j)") {
    const DTable t = compute_d(6);
    for (int j = 0; j <= 6; ++j) {
        CAPTURE(j);
        const OracleVerdict v = hermite_oracle_d(j, t, 512);
        CHECK(v.pass);
        CHECK(v.quantity == "hermite j=" + std::to_string(j));
        REQUIRE(v.exact_value.has_value());
        CHECK(*v.exact_value == Rat(t.d[(size_t)j]));
        CHECK(v.abs_error <= v.tolerance);
    }
    CHECK_THROWS_AS(hermite_oracle_d(7, t, 512), InsufficientTable);
    CHECK_THROWS_AS(hermite_oracle_d(-1, t, 512), std::invalid_argument);
}

TEST_CASE("hermite sum vanishes at odd index") {
    const OracleVerdict v = hermite_odd_oracle(3, 256);
    CHECK(v.pass);
    REQUIRE(v.exact_value.has_value());
    CHECK(*v.exact_value == 0);
    CHECK_THROWS_AS(hermite_odd_oracle(2, 256), std::invalid_argument);
    CHECK_THROWS_AS(hermite_odd_oracle(-3, 256), std::invalid_argument);
}

TEST_CASE("power sums") {
    const DTable t = compute_d(3);
    for (int k = 0; k <= 6; ++k) {
        CAPTURE(k);
        const OracleVerdict v = power_sum_oracle(k, t, 256);
        CHECK(v.pass);
        CHECK(v.quantity == "power-sum k=" + std::to_string(k));
    }
}

TEST_CASE("derivative oracle") {
    const DTable t = compute_d(6);
    for (int n = 0; n <= 12; ++n) {
        CAPTURE(n);
        const OracleVerdict v = deriv_oracle(n, t, 256);
        CHECK(v.pass);
        CHECK(v.quantity == "derivs n=" + std::to_string(n));
    }
}

TEST_CASE("generating function identity") {
    const DTable t = compute_d(21);
    const OracleVerdict v = genfun_oracle(make_rat(1, 100), 20, t, 256);
    CHECK(v.pass);
    CHECK(v.abs_error < BigFloat::of_str("1e-30", 256));

    CHECK_THROWS_AS(genfun_oracle(make_rat(1, 4), 20, t, 256), std::domain_error);
    CHECK_THROWS_AS(genfun_oracle(make_rat(-1, 100), 20, t, 256),
                    std::domain_error);
    CHECK_THROWS_AS(genfun_oracle(make_rat(1, 100), 21, t, 256),
                    InsufficientTable);
}

TEST_CASE("genfun truncation error shrinks with order") {
    const DTable t = compute_d(16);
    BigFloat prev = BigFloat::of(1L, 256);
    for (int N : {5, 10, 15}) {
        CAPTURE(N);
        const OracleVerdict v = genfun_oracle(make_rat(1, 10), N, t, 256);
        CHECK(v.pass);
        CHECK(v.abs_error < prev);
        prev = v.abs_error;
    }
}

TEST_CASE("sigma Taylor partial sums") {
    const DTable t = compute_d(21);
    for (long sgn : {1L, -1L}) {
        CAPTURE(sgn);
        const BigFloat z = BigFloat::of(make_rat(sgn, 4), 256);
        const OracleVerdict v = sigma_taylor_oracle(z, 20, t, 256);
        CHECK(v.pass);
    }
    CHECK_THROWS_AS(sigma_taylor_oracle(BigFloat::of(1L, 256), 20, t, 256),
                    std::domain_error);
    CHECK_THROWS_AS(
        sigma_taylor_oracle(BigFloat::of(make_rat(1, 4), 256), 21, t, 256),
        InsufficientTable);
}

TEST_CASE("verdict flag always mirrors the comparison") {
    const DTable t = compute_d(4);
    for (int j = 0; j <= 4; ++j) {
        const OracleVerdict v = hermite_oracle_d(j, t, 256);
        CHECK(v.pass == (v.abs_error <= v.tolerance));
    }
}

TEST_CASE("oracles detect a corrupted table") {
    DTable t = compute_d(8);
    t.d[3] += 1;
    CHECK_FALSE(hermite_oracle_d(3, t, 256).pass);
    CHECK_FALSE(deriv_oracle(6, t, 256).pass);
    CHECK_FALSE(genfun_oracle(make_rat(1, 10), 7, t, 256).pass);
    CHECK_FALSE(
        sigma_taylor_oracle(BigFloat::of(make_rat(1, 4), 256), 7, t, 256).pass);
    // entries before the corruption still verify
    CHECK(hermite_oracle_d(2, t, 256).pass);
}

}  // TEST_SUITE
