#include <cmath>

#include "arakzeta/errors.hpp"
#include "arakzeta/special.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arakzeta;

TEST_CASE("log_gamma matches libm on the real axis") {
    for (double x = 0.05; x < 60.0; x *= 1.37) {
        const cplx v = log_gamma(x);
        CHECK(std::abs(v.real() - std::lgamma(x)) <= 1e-13 * std::max(1.0, std::abs(std::lgamma(x))));
        CHECK(std::abs(v.imag()) <= 1e-14);
    }
    for (double x : {-0.5, -1.5, -2.25, -7.6}) {
        const cplx g = arakzeta::gamma(cplx(x));
        CHECK(std::abs(g.real() - std::tgamma(x)) <= 1e-12 * std::abs(std::tgamma(x)));
    }
}

TEST_CASE("gamma satisfies recurrence, reflection and modulus identities") {
    oracle::Gen gen(1);
    for (int i = 0; i < 200; ++i) {
        const cplx z = gen.complex_in(-6.0, 12.0, -15.0, 15.0);
        if (std::abs(z - std::round(z.real())) < 1e-3) continue;
        const cplx rec = log_gamma(z + 1.0) - log_gamma(z) - std::log(z);
        const cplx k = std::round(rec.imag() / (2.0 * kPi));
        CHECK(std::abs(rec - cplx(0, 2.0 * kPi) * k) <= 1e-11);
        const cplx refl = gamma(z) * gamma(1.0 - z) * std::sin(kPi * z);
        CHECK(std::abs(refl - kPi) <= 1e-9 * std::max(1.0, std::abs(gamma(z) * gamma(1.0 - z))));
    }
    for (double y : {0.3, 1.0, 4.0, 20.0}) {
        const double m = std::exp(2.0 * log_gamma(cplx(0.0, y)).real());
        CHECK(std::abs(m / (kPi / (y * std::sinh(kPi * y))) - 1.0) <= 1e-12);
        const double h = std::exp(2.0 * log_gamma(cplx(0.5, y)).real());
        CHECK(std::abs(h / (kPi / std::cosh(kPi * y)) - 1.0) <= 1e-12);
    }
    CHECK(std::abs(arakzeta::gamma(cplx(0.5)) - std::sqrt(kPi)) <= 1e-13);
}

TEST_CASE("log_gamma raises at poles") {
    CHECK_THROWS_AS(log_gamma(0.0), PoleError);
    CHECK_THROWS_AS(log_gamma(-3.0), PoleError);
}

TEST_CASE("gamma_R gamma_R(s+1) = gamma_C") {
    for (cplx s : {cplx(2.3), cplx(0.7, 1.9), cplx(-1.3, 0.4), cplx(5.0, -3.0)})
        CHECK(std::abs(gamma_R(s) * gamma_R(s + 1.0) / gamma_C(s) - 1.0) <= 1e-12);
    CHECK(std::abs(gamma_R(2.0) - 1.0 / (std::sqrt(2.0) * kPi)) <= 1e-15);
}

TEST_CASE("expm1 is accurate near zero") {
    for (cplx z : {cplx(1e-12, 3e-13), cplx(-2e-9, 1e-9), cplx(0.3, -0.2), cplx(4.0, 2.0)}) {
        cplx series = 0.0, term = 1.0;
        for (int k = 1; k < 60; ++k) {
            term *= z / static_cast<double>(k);
            series += term;
        }
        CHECK(std::abs(expm1(z) - series) <= 1e-15 * std::abs(series) + 1e-300);
    }
}

TEST_CASE("Hurwitz zeta matches direct summation for Re u > 1") {
    oracle::Gen gen(2);
    for (int i = 0; i < 40; ++i) {
        const cplx u = gen.complex_in(1.5, 6.0, -8.0, 8.0);
        const cplx z = gen.complex_in(0.1, 3.0, -2.0, 2.0);
        // Sum to N, then the Euler-Maclaurin tail through the B_4 term.
        const int N = 4000;
        cplx s = 0.0;
        for (int k = N - 1; k >= 0; --k) s += std::pow(cplx(k) + z, -u);
        const cplx a = cplx(N) + z;
        s += std::pow(a, 1.0 - u) / (u - 1.0) + 0.5 * std::pow(a, -u) + u * std::pow(a, -u - 1.0) / 12.0 -
             u * (u + 1.0) * (u + 2.0) * std::pow(a, -u - 3.0) / 720.0;
        const auto hv = hurwitz_zeta_and_du(u, z);
        CHECK(std::abs(hv.value - s) <= 1e-11 * std::max(1.0, std::abs(s)));
        // derivative against a central difference
        const double h = 1e-5;
        const cplx fd = (hurwitz_zeta_and_du(u + h, z).value - hurwitz_zeta_and_du(u - h, z).value) / (2.0 * h);
        CHECK(std::abs(hv.du - fd) <= 1e-7 * std::max(1.0, std::abs(fd)));
    }
}

TEST_CASE("Hurwitz zeta special values") {
    for (double x : {0.2, 1.0, 2.5, 7.0}) {
        const auto hv = hurwitz_zeta_and_du(0.0, x);
        CHECK(std::abs(hv.value - (0.5 - x)) <= 1e-13);
        CHECK(std::abs(hv.du - (std::lgamma(x) - 0.5 * std::log(2.0 * kPi))) <= 1e-12);
        const auto hm = hurwitz_zeta_and_du(-1.0, x);  // -B_2(x)/2
        CHECK(std::abs(hm.value + (x * x - x + 1.0 / 6.0) / 2.0) <= 1e-12);
    }
    CHECK(std::abs(riemann_zeta(2.0) - kPi * kPi / 6.0) <= 1e-15);
    CHECK(std::abs(riemann_zeta(4.0) - std::pow(kPi, 4) / 90.0) <= 1e-15);
    CHECK(std::abs(riemann_zeta(0.0) + 0.5) <= 1e-15);
    CHECK(std::abs(riemann_zeta(-1.0) + 1.0 / 12.0) <= 1e-13);
    CHECK(std::abs(hurwitz_zeta_and_du(2.0, 0.5).value - 3.0 * kPi * kPi / 6.0) <= 1e-13);
    CHECK_THROWS_AS(hurwitz_zeta_and_du(1.0, 1.0), PoleError);
    CHECK_THROWS_AS(hurwitz_zeta_and_du(2.0, cplx(-0.5, 1.0)), DomainError);
}

TEST_CASE("Bernoulli table") {
    CHECK(bernoulli_even(0) == 1.0);
    CHECK(bernoulli_even(1) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(bernoulli_even(2) == doctest::Approx(-1.0 / 30.0).epsilon(1e-15));
    CHECK(bernoulli_even(5) == doctest::Approx(5.0 / 66.0).epsilon(1e-15));
    CHECK_THROWS_AS(bernoulli_even(100), DomainError);
}
