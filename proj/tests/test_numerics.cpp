#include <doctest.h>

#include <stdexcept>
#include <string>

#include "thetad/bigfloat.hpp"
#include "thetad/errors.hpp"
#include "thetad/numbers.hpp"
#include "thetad/theta.hpp"

using namespace thetad;

namespace {

// theta3(1) to 85 digits, more than any precision used below can resolve.
const char* kTheta31 =
    "1.086434811213308014575316121510223457070205707245218885920790315981856"
    "732267109795961";

}  // namespace

TEST_SUITE("bigfloat_theta") {

TEST_CASE("precision floor") {
    CHECK_THROWS_AS(BigFloat(32), std::invalid_argument);
    CHECK_THROWS_AS(BigFloat::of(1L, 16), std::invalid_argument);
    CHECK(BigFloat(64).precision() == 64);
    CHECK(BigFloat::pi(128).precision() == 128);
}

TEST_CASE("arithmetic basics") {
    const mpfr_prec_t P = 128;
    const BigFloat a = BigFloat::of(make_rat(3, 4), P);
    const BigFloat b = BigFloat::of(2L, P);
    CHECK((a + b).to_double() == doctest::Approx(2.75));
    CHECK((a * b).to_double() == doctest::Approx(1.5));
    CHECK((a - b).sign() == -1);
    CHECK((b / a).to_double() == doctest::Approx(8.0 / 3.0));
    CHECK((-a).sign() == -1);
    CHECK(abs(-a) == a);
    CHECK(BigFloat(P).is_zero());

    CHECK(sqrt(BigFloat::of(4L, P)) == b);
    CHECK_THROWS_AS(sqrt(BigFloat::of(-1L, P)), std::domain_error);
    CHECK(ldexp(BigFloat::of(3L, P), -2) == a * BigFloat::of(1L, P));
    CHECK(BigFloat::pow2(-10, P) == BigFloat::of(make_rat(1, 1024), P));
    CHECK(pow_ui(b, 10) == BigFloat::of(1024L, P));
    CHECK(agm(BigFloat::of(1L, P), BigFloat::of(1L, P)) == BigFloat::of(1L, P));

    // mixed-precision operations carry the larger precision
    CHECK((BigFloat::of(1L, 64) + BigFloat::of(1L, 192)).precision() == 192);
}

TEST_CASE("of and string round trips") {
    const mpfr_prec_t P = 128;
    const BigFloat q = BigFloat::of(make_rat(-355, 113), P);
    CHECK(q.sign() == -1);
    const BigFloat back = BigFloat::of_str(q.str(), P);
    CHECK(abs(q - back) < BigFloat::pow2(-120, P));
    CHECK(BigFloat::of_str("0.25", P) == BigFloat::pow2(-2, P));
    CHECK(BigFloat::of(BigInt("123456789123456789"), P) ==
          BigFloat::of_str("123456789123456789", P));
}

TEST_CASE("theta3 at x=1 matches the reference digits") {
    const mpfr_prec_t P = 256;
    const BigFloat t = theta3(BigFloat::of(1L, P), P);
    const BigFloat ref = BigFloat::of_str(kTheta31, P + 64);
    CHECK(abs(t - ref) < BigFloat::pow2(-250, P));
}

TEST_CASE("theta3 domain and decay") {
    const mpfr_prec_t P = 256;
    CHECK_THROWS_AS(theta3(BigFloat(P), P), std::domain_error);
    CHECK_THROWS_AS(theta3(BigFloat::of(-2L, P), P), std::domain_error);
    // theta3(50) - 1 = 2 e^{-50 pi} (1 + smaller): bracketed by e^{-50 pi}
    // and 4 e^{-50 pi}
    const BigFloat tail = theta3(BigFloat::of(50L, P), P) - BigFloat::of(1L, P);
    const BigFloat e50 = exp(-(BigFloat::of(50L, P) * BigFloat::pi(P)));
    CHECK(tail > e50);
    CHECK(tail < ldexp(e50, 2));
}

TEST_CASE("modular transformation") {
    const mpfr_prec_t P = 256;
    const BigFloat tol = BigFloat::pow2(-240, P);
    for (const char* xs : {"0.5", "0.9", "1.5", "1.7", "3.0"}) {
        CAPTURE(xs);
        const BigFloat x = BigFloat::of_str(xs, P);
        const BigFloat lhs = theta3(BigFloat::of(1L, P) / x, P);
        const BigFloat rhs = sqrt(x) * theta3(x, P);
        CHECK(abs(lhs - rhs) < tol);
    }
}

TEST_CASE("derivatives at 1: low-order closed forms") {
    const mpfr_prec_t P = 256;
    const Constants c = constants(P);
    const BigFloat tol = BigFloat::pow2(-240, P);

    CHECK(abs(theta3_deriv(0, P) - c.theta3_1) < tol);
    // theta3'(1) = -theta3(1)/4
    CHECK(abs(theta3_deriv(1, P) + ldexp(c.theta3_1, -2)) < tol);
    // theta3''(1) = theta3(1) (3 + Omega) / 16
    const BigFloat w2 = ldexp(c.theta3_1 * (BigFloat::of(3L, P) + c.omega), -4);
    CHECK(abs(theta3_deriv(2, P) - w2) < tol);
    // theta3'''(1) = -theta3(1) (15 + 15 Omega) / 64
    const BigFloat w3 =
        ldexp(c.theta3_1 * (BigFloat::of(15L, P) + c.omega * 15L), -6);
    CHECK(abs(theta3_deriv(3, P) + w3) < tol);
    // theta3''''(1) = theta3(1) (105 + 210 Omega - Omega^2) / 256
    const BigFloat w4 = ldexp(c.theta3_1 * (BigFloat::of(105L, P) +
                                            c.omega * 210L - c.omega * c.omega),
                              -8);
    CHECK(abs(theta3_deriv(4, P) - w4) < tol);
}

TEST_CASE("derivative stack consistency") {
    const mpfr_prec_t P = 192;
    const BigFloat one = BigFloat::of(1L, P);
    const auto ys = theta3_derivs_at(one, 3, P);
    REQUIRE(ys.size() == 4);
    const BigFloat tol = BigFloat::pow2(-180, P);
    CHECK(abs(ys[0] - theta3(one, P)) < tol);
    CHECK(abs(ys[1] - theta3_deriv(1, P)) < tol);
    CHECK(abs(ys[2] - theta3_deriv(2, P)) < tol);
}

TEST_CASE("constants self-consistency") {
    for (mpfr_prec_t P : {64, 128, 256}) {
        CAPTURE(P);
        const Constants c = constants(P);
        CHECK(c.precision == P);
        CHECK(c.omega == ldexp(c.phi, 2));  // exact, not approximate
        // Omega = pi^2 theta3(1)^8 / 2, recomputed
        const BigFloat om =
            ldexp(BigFloat::pi(P) * BigFloat::pi(P) * pow_ui(c.theta3_1, 8), -1);
        CHECK(abs(om - c.omega) < BigFloat::pow2(-(long)P + 16, P));
        // theta3(1) = Gamma(1/4) / (sqrt(2) pi^{3/4})  <=>
        // Gamma(1/4)^2 = 2 theta3(1)^2 pi^{3/2}
        const BigFloat pi = BigFloat::pi(P);
        const BigFloat lhs = c.gamma_quarter * c.gamma_quarter;
        const BigFloat rhs = ldexp(c.theta3_1 * c.theta3_1 * pi * sqrt(pi), 1);
        CHECK(abs(lhs - rhs) < BigFloat::pow2(-(long)P + 16, P));
    }
}

TEST_CASE("gamma(1/4) against the independent AGM route") {
    // Gamma(1/4) = sqrt((2 pi)^{3/2} / agm(1, sqrt 2)); the agm shares no
    // code with the theta-series route used by constants().
    const mpfr_prec_t P = 320;
    const Constants c = constants(P);
    const BigFloat two_pi = ldexp(BigFloat::pi(P), 1);
    const BigFloat m = agm(BigFloat::of(1L, P), sqrt(BigFloat::of(2L, P)));
    const BigFloat g = sqrt(two_pi * sqrt(two_pi) / m);
    CHECK(abs(g - c.gamma_quarter) < BigFloat::pow2(-(long)P + 16, P));
}

TEST_CASE("sigma3 is even") {
    const mpfr_prec_t P = 256;
    const BigFloat tol = BigFloat::pow2(-240, P);
    for (const char* zs : {"0.1", "0.3", "0.55"}) {
        CAPTURE(zs);
        const BigFloat z = BigFloat::of_str(zs, P);
        CHECK(abs(sigma3(z, P) - sigma3(-z, P)) < tol);
    }
    CHECK_THROWS_AS(sigma3(BigFloat::of(1L, P), P), std::domain_error);
    CHECK_THROWS_AS(sigma3(BigFloat::of(-3L, P), P), std::domain_error);
}

TEST_CASE("hyp2f1 value at the lemniscatic point") {
    const mpfr_prec_t P = 256;
    const Rat h = make_rat(1, 2);
    // G(1/2) = Gamma(1/4)^2 / (2 pi^{3/2})
    const BigFloat g = hyp2f1_value(h, h, Rat(1), BigFloat::of(h, P), P);
    const Constants c = constants(P);
    const BigFloat pi = BigFloat::pi(P);
    const BigFloat want =
        c.gamma_quarter * c.gamma_quarter / ldexp(pi * sqrt(pi), 1);
    CHECK(abs(g - want) < BigFloat::pow2(-(long)P + 24, P));

    CHECK_THROWS_AS(hyp2f1_value(h, h, Rat(0), BigFloat::of(h, P), P), PoleInC);
    CHECK_THROWS_AS(hyp2f1_value(h, h, Rat(1), BigFloat::of(2L, P), P),
                    std::domain_error);
}

TEST_CASE("hyp2f1 derivative via Richardson extrapolation") {
    // G'(1/2) = 2 Gamma(3/4)^2 / pi^{3/2} with Gamma(3/4) = pi sqrt(2) / Gamma(1/4).
    const mpfr_prec_t P = 320;
    const Rat h = make_rat(1, 2);
    const BigFloat x0 = BigFloat::of(h, P);
    const auto G = [&](const BigFloat& x) {
        return hyp2f1_value(h, h, Rat(1), x, P);
    };
    const auto central = [&](const BigFloat& step) {
        return (G(x0 + step) - G(x0 - step)) / ldexp(step, 1);
    };
    const BigFloat step = BigFloat::pow2(-20, P);
    const BigFloat d1 = central(step);
    const BigFloat d2 = central(ldexp(step, -1));
    const BigFloat richardson = (ldexp(d2, 2) - d1) / 3L;

    const Constants c = constants(P);
    const BigFloat pi = BigFloat::pi(P);
    const BigFloat g34 = pi * sqrt(BigFloat::of(2L, P)) / c.gamma_quarter;
    const BigFloat want = ldexp(g34 * g34 / (pi * sqrt(pi)), 1);
    CHECK(abs(richardson - want) < BigFloat::pow2(-68, P));
}

TEST_CASE("jacobi relation between theta3 and the hypergeometric ratio") {
    // theta3(G(1-t)/G(t)) = sqrt(G(t)) for 0 < t < 1.
    const mpfr_prec_t P = 256;
    const Rat h = make_rat(1, 2);
    const BigFloat t = BigFloat::of_str("0.3", P);
    const BigFloat gt = hyp2f1_value(h, h, Rat(1), t, P);
    const BigFloat g1t = hyp2f1_value(h, h, Rat(1), BigFloat::of(1L, P) - t, P);
    CHECK(abs(theta3(g1t / gt, P) - sqrt(gt)) < BigFloat::pow2(-230, P));
}

TEST_CASE("precision doubling stability") {
    // at a dyadic point both evaluations see exactly the same x
    const BigFloat x128 = BigFloat::of(make_rat(3, 4), 128);
    const BigFloat x256 = BigFloat::of(make_rat(3, 4), 256);
    CHECK(abs(theta3(x128, 128) - theta3(x256, 256)) < BigFloat::pow2(-120, 256));
    const Rat h = make_rat(1, 2);
    CHECK(abs(hyp2f1_value(h, h, Rat(1), x128, 128) -
              hyp2f1_value(h, h, Rat(1), x256, 256)) < BigFloat::pow2(-120, 256));
}

}  // TEST_SUITE
