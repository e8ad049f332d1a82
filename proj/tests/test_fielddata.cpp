#include <cmath>
#include <cstdio>

#include "arakzeta/errors.hpp"
#include "arakzeta/field.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arakzeta;

TEST_CASE("rationals") {
    const auto F = make_rationals();
    CHECK(F.degree_n == 1);
    CHECK(F.r1 == 1);
    CHECK(F.mu_count == 2);
    CHECK(F.class_number_h == 1);
    CHECK(F.regulator == 1.0);
    CHECK(F.disc_abs == 1.0);
    CHECK_NOTHROW(validate(F));
}

TEST_CASE("quadratic class numbers and regulators match independent oracles") {
    for (long long m = -50; m <= 50; ++m) {
        if (m == 0 || m == 1 || !is_squarefree(m)) continue;
        CAPTURE(m);
        const auto F = make_quadratic(m);
        CHECK_NOTHROW(validate(F));
        const long long D = fundamental_discriminant(m);
        CHECK(F.disc_abs == static_cast<double>(std::llabs(D)));
        CHECK(F.discriminant == D);
        if (m < 0) {
            CHECK(F.class_number_h == oracle::class_number_forms(D));
            CHECK(F.regulator == 1.0);
            CHECK(F.mu_count == (m == -1 ? 4 : m == -3 ? 6 : 2));
        } else {
            const double R = oracle::regulator_pell(D);
            CHECK(std::abs(F.regulator - R) <= 1e-9 * R);
            CHECK(F.class_number_h == oracle::class_number_real(D, R));
            CHECK(F.mu_count == 2);
        }
    }
}

TEST_CASE("field file round trip") {
    for (long long m : {-15LL, -5LL, 2LL, 10LL}) {
        const auto F = make_quadratic(m);
        const auto G = parse_field_json(field_to_json(F));
        CHECK(same_field_data(F, G));
    }
    const auto H = load_field_file(oracle::data_path("quad_m15.json"));
    CHECK(H.class_number_h == 2);
    CHECK(same_field_data(H, make_quadratic(-15)));
}

TEST_CASE("invalid field data is rejected") {
    auto F = make_quadratic(5);
    F.regulator *= 1.01;
    CHECK_THROWS_AS(validate(F), InvariantError);
    auto G = make_quadratic(-15);
    G.ideal_classes[1].norm = 3.0;
    CHECK_THROWS(validate(G));
    CHECK_THROWS_AS(parse_field_json("{not json"), InputError);
    CHECK_THROWS_AS(parse_field_json("{\"degree\": 2}"), InputError);
    CHECK_THROWS_AS(make_quadratic(12), InputError);
    CHECK_THROWS_AS(load_field_file("/nonexistent/field.json"), InputError);
}
