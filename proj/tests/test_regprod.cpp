#include <algorithm>
#include <cmath>

#include "arakzeta/errors.hpp"
#include "arakzeta/regprod.hpp"
#include "arakzeta/special.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arakzeta;

TEST_CASE("finite products are ordinary products") {
    oracle::Gen gen(60);
    for (int i = 0; i < 50; ++i) {
        RegularizedSequence seq;
        cplx prod = 1.0;
        const int k = gen.integer(1, 6);
        for (int j = 0; j < k; ++j) {
            const cplx a = gen.complex_in(-3.0, 3.0, -3.0, 3.0);
            const int m = gen.integer(-2, 3);
            seq.terms.push_back({a, m});
            prod *= std::pow(a, static_cast<double>(m));
        }
        const double alpha = std::exp(gen.uniform(-1.0, 1.0));
        const auto r = reg_product(seq, alpha);
        int msum = 0;
        for (const auto& t : seq.terms) msum += t.m;
        CHECK(std::abs(r.value - std::pow(alpha, msum) * prod) <= 1e-12 * std::abs(r.value));
    }
}

TEST_CASE("sqrt(2 pi) and Lerch") {
    RegularizedSequence nat;
    nat.tails.push_back({1.0, 1.0, 0, 1});
    CHECK(std::abs(reg_product(nat, 1.0).value - std::sqrt(2.0 * oracle::kPi)) <= 1e-10);
    oracle::Gen gen(61);
    for (int i = 0; i < 10; ++i) {
        const cplx z = gen.complex_in(0.05, 2.95, -2.0, 2.0);
        const double alpha = std::exp(gen.uniform(-2.0, 2.0));
        RegularizedSequence seq;
        seq.tails.push_back({z, 1.0, 0, 1});
        // independent closed form: alpha^{zeta_H(0,z)} sqrt(2 pi) / Gamma(z), zeta_H(0,z) = 1/2 - z
        const cplx ref = std::exp((0.5 - z) * std::log(alpha)) * std::sqrt(2.0 * oracle::kPi) / arakzeta::gamma(z);
        CHECK(std::abs(reg_product(seq, alpha).value - ref) <= 1e-9 * std::abs(ref));
        CHECK(std::abs(lerch_closed(alpha, z) - ref) <= 1e-12 * std::abs(ref));
        CHECK(std::abs(reg_product(seq, alpha).d0 - (0.5 - z)) <= 1e-12);
    }
}

TEST_CASE("Gamma factors as regularized products") {
    oracle::Gen gen(62);
    for (int i = 0; i < 20; ++i) {
        const cplx s = gen.complex_in(-3.0, 5.0, -4.0, 4.0);
        if (std::abs(s - std::round(s.real())) < 0.05) continue;
        CHECK(std::abs(gamma_R_reg_check(s)) <= 1e-9);
        CHECK(std::abs(gamma_C_reg_check(s)) <= 1e-9);
    }
}

TEST_CASE("translation consistency") {
    oracle::Gen gen(63);
    for (int i = 0; i < 20; ++i) {
        const cplx z = gen.complex_in(0.1, 3.0, -3.0, 3.0);
        const double alpha = std::exp(gen.uniform(-1.5, 1.5));
        RegularizedSequence a, b;
        a.tails.push_back({z, 1.0, 0, 1});
        b.tails.push_back({z, 1.0, 1, 1});
        const cplx lhs = reg_product(a, alpha).value, rhs = alpha * z * reg_product(b, alpha).value;
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(lhs));
    }
}

TEST_CASE("tails needing rotation or a finite head") {
    // prod_{nu >= 0} alpha (z - nu) with z off the real axis: left-moving tail
    oracle::Gen gen(64);
    for (int i = 0; i < 10; ++i) {
        const cplx z = gen.complex_in(-3.0, 3.0, 0.2, 2.0);
        RegularizedSequence seq;
        seq.tails.push_back({z, -1.0, 0, 1});
        const auto n = normalize_tails(seq);
        for (const auto& t : n.tails) {
            CHECK((t.z / t.c + static_cast<double>(t.nu0)).real() > 0.0);
        }
        // translation consistency in the rotated form
        RegularizedSequence shifted;
        shifted.tails.push_back({z - 1.0, -1.0, 0, 1});
        const cplx lhs = reg_product(seq, 1.0).value, rhs = z * reg_product(shifted, 1.0).value;
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(lhs));
    }
}

TEST_CASE("two-sided lattices: 1 - q^{-(s - rho)} independently of alpha") {
    oracle::Gen gen(65);
    for (int i = 0; i < 20; ++i) {
        const double q = std::vector<double>{2.0, 3.0, 4.0, 5.0, 7.0, 9.0}[gen.integer(0, 5)];
        const cplx rho = gen.complex_in(-1.0, 1.0, -1.0, 1.0);
        const cplx s = gen.complex_in(-2.0, 3.0, -3.0, 3.0);
        const double alpha = std::exp(gen.uniform(-2.0, 2.0));
        const cplx ref = 1.0 - std::exp(-(s - rho) * std::log(q));
        const auto r = lattice_family_product(q, rho, s, alpha, 1);
        CHECK(std::abs(r.value - ref) <= 1e-9 * std::abs(ref));
        CHECK(std::abs(r.d0) <= 1e-12);
    }
}

TEST_CASE("P^1 and curve two-variable zeta are regularized products") {
    oracle::Gen gen(66);
    for (int i = 0; i < 5; ++i) {
        const cplx s = gen.complex_in(0.5, 3.0, -3.0, 3.0), w = gen.complex_in(-1.0, 1.0, -1.0, 1.0);
        const double q = 2.0 + gen.integer(0, 3);
        const cplx a = ff_regularization_check(q, w, s, 1.0), b = ff_regularization_check(q, w, s, 1.0 / (2 * oracle::kPi));
        CHECK(std::abs(a) <= 1e-6);
        CHECK(std::abs(a - b) <= 1e-8);
    }
    // elliptic curve over F_2 with 5 points, u = q^w: P = 1 + (4 - u) T + u T^2
    for (cplx w : {cplx(1.0), cplx(0.4, 0.3)}) {
        const cplx u = std::exp(w * std::log(2.0));
        const std::vector<cplx> P = {1.0, 4.0 - u, u};
        const cplx s(1.3, 0.7);
        CHECK(std::abs(curve_regularization_check(2.0, w, s, P, 1.0)) <= 1e-6);
    }
    CHECK_THROWS_AS(curve_regularization_check(2.0, 1.0, 2.0, {2.0, 1.0}, 1.0), DomainError);
}

TEST_CASE("polynomial roots") {
    const std::vector<cplx> roots = {1.0, 2.0, cplx(0.0, -3.0), cplx(-0.5, 0.25)};
    std::vector<cplx> c = {1.0};
    for (const auto& r : roots) {
        std::vector<cplx> n(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            n[i + 1] += c[i];
            n[i] -= r * c[i];
        }
        c = n;
    }
    const auto got = polynomial_roots(c);
    REQUIRE(got.size() == roots.size());
    for (const auto& r : roots) {
        double best = 1e300;
        for (const auto& g : got) best = std::min(best, std::abs(g - r));
        CHECK(best <= 1e-10);
    }
    CHECK_THROWS_AS(polynomial_roots({0.0, 0.0}), DomainError);
}
