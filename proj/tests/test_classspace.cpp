#include <cmath>

#include "arakzeta/arakelov.hpp"
#include "arakzeta/classspace.hpp"
#include "arakzeta/errors.hpp"
#include "arakzeta/field.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arakzeta;
using cplx = std::complex<double>;

TEST_CASE("grid weights sum to hR and points have norm one") {
    for (long long m : {-15LL, -1LL, 2LL, 5LL, 10LL, 79LL}) {
        const auto F = make_quadratic(m);
        for (int P : {1, 7, 64}) {
            const auto g = build_grid(F, P);
            const double hR = F.class_number_h * F.regulator;
            CHECK(std::abs(g.total_weight - hR) <= 1e-14 * hR);
            CHECK(g.points.size() == static_cast<std::size_t>(F.class_number_h * (F.unit_rank_r ? P : 1)));
            for (const auto& p : g.points) CHECK(std::abs(arakelov_norm(F, p.divisor) - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("midpoint rule on the torus") {
    const auto F = make_quadratic(10);
    const double hR = F.class_number_h * F.regulator;
    for (int P : {3, 16, 101}) {
        const auto g = build_grid(F, P);
        const PointFunction one = [](const ClassSpacePoint&) { return cplx(1.0); };
        const PointFunction sq = [](const ClassSpacePoint& p) { return cplx(p.theta[0] * p.theta[0]); };
        const PointFunction wave = [](const ClassSpacePoint& p) { return std::exp(cplx(0, 2.0 * oracle::kPi * p.theta[0])); };
        CHECK(std::abs(integrate(g, one) - hR) <= 1e-14 * hR);
        // midpoint rule for theta^2 on [0,1): 1/3 - 1/(12 P^2)
        const double mid = 1.0 / 3.0 - 1.0 / (12.0 * P * P);
        CHECK(std::abs(integrate(g, sq) - hR * mid) <= 1e-13);
        CHECK(std::abs(integrate(g, wave)) <= 1e-13);
    }
}

TEST_CASE("serial and parallel integration are identical") {
    const auto F = make_quadratic(5);
    const auto g = build_grid(F, 128);
    const PointFunction k0 = [&](const ClassSpacePoint& p) { return cplx(theta_k0(F, p.divisor, 1e-12)); };
    const cplx a = integrate(g, k0, Exec::parallel), b = integrate_serial(g, k0);
    CHECK(a == b);
}

TEST_CASE("offset invariance of isometry-class integrands") {
    for (long long m : {2LL, 5LL, 10LL}) {
        const auto F = make_quadratic(m);
        const PointFunction k0 = [&](const ClassSpacePoint& p) { return cplx(theta_k0(F, p.divisor, 1e-13)); };
        const PointFunction a = [&](const ClassSpacePoint& p) { return cplx(invariants_abnu(F, p.divisor).a); };
        const auto g0 = build_grid(F, 256), g1 = build_grid(F, 256, {0.37});
        CHECK(std::abs(integrate(g0, k0) - integrate(g1, k0)) <= 1e-11);
        // a is only piecewise smooth: second-order agreement
        CHECK(std::abs(integrate(g0, a) - integrate(g1, a)) <= 1e-4);
    }
}

TEST_CASE("refined integration converges") {
    const auto F = make_quadratic(2);
    const PointFunction k0 = [&](const ClassSpacePoint& p) { return cplx(theta_k0(F, p.divisor, 1e-13)); };
    const auto r = integrate_refined(F, k0, 1e-10);
    CHECK(r.change <= 1e-10);
    CHECK(std::abs(r.value - integrate(build_grid(F, 512), k0)) <= 1e-10);
}

TEST_CASE("grid input validation") {
    const auto F = make_quadratic(2);
    CHECK_THROWS_AS(build_grid(F, 0), InputError);
    CHECK_THROWS_AS(build_grid(F, 8, {0.1, 0.2}), InputError);
    CHECK_THROWS_AS(class_space_divisor(F, 3, {0.0}), InputError);
}
