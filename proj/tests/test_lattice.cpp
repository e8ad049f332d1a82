#include <algorithm>
#include <cmath>

#include "arakzeta/errors.hpp"
#include "arakzeta/lattice.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arakzeta;

TEST_CASE("enumeration agrees with box summation") {
    oracle::Gen gen(10);
    for (int trial = 0; trial < 30; ++trial) {
        const int d = gen.integer(1, 4);
        const Eigen::MatrixXd G = gen.gram(d);
        const double bound = gen.uniform(1.0, 12.0);
        auto ref = oracle::box_norms(G, oracle::safe_box(G, bound));
        ref.erase(std::remove_if(ref.begin(), ref.end(), [&](double v) { return v > bound; }), ref.end());
        std::sort(ref.begin(), ref.end());
        const auto got = enumerate_vectors(G, bound);
        const auto norms = enumerate_norms(G, bound);
        REQUIRE(got.size() == ref.size());
        REQUIRE(norms.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) {
            CHECK(std::abs(got[i].value - ref[i]) <= 1e-10 * std::max(1.0, ref[i]));
            CHECK(std::abs(norms[i] - ref[i]) <= 1e-10 * std::max(1.0, ref[i]));
            Eigen::VectorXd c(d);
            for (int k = 0; k < d; ++k) c[k] = static_cast<double>(got[i].coords[k]);
            CHECK(std::abs(c.dot(G * c) - got[i].value) <= 1e-10 * std::max(1.0, ref[i]));
        }
    }
}

TEST_CASE("serial and parallel enumeration are identical") {
    oracle::Gen gen(11);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::MatrixXd G = gen.gram(gen.integer(2, 4));
        const auto a = enumerate_vectors(G, 20.0, Exec::parallel);
        const auto b = enumerate_vectors_serial(G, 20.0);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].coords == b[i].coords);
            CHECK(a[i].value == b[i].value);
        }
    }
}

TEST_CASE("lattice minimum and LLL") {
    oracle::Gen gen(12);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = gen.integer(2, 4);
        const Eigen::MatrixXd G = gen.gram(d);
        const auto ref = oracle::box_norms(G, oracle::safe_box(G, G.diagonal().minCoeff()));
        CHECK(std::abs(lattice_minimum(G) - *std::min_element(ref.begin(), ref.end())) <= 1e-10);
        Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> U;
        const Eigen::MatrixXd R = lll_reduce(G, U);
        const Eigen::MatrixXd Ud = U.cast<double>();
        CHECK(std::abs(std::abs(Ud.determinant()) - 1.0) <= 1e-9);
        CHECK((Ud.transpose() * G * Ud - R).norm() <= 1e-9 * G.norm());
    }
    CHECK(lattice_minimum(Eigen::Matrix2d{{2.0, 1.0}, {1.0, 2.0}}) == doctest::Approx(2.0));
}

TEST_CASE("non positive definite Gram matrices are rejected") {
    Eigen::MatrixXd G(2, 2);
    G << 1.0, 2.0, 2.0, 1.0;
    CHECK_THROWS_AS(enumerate_vectors(G, 4.0), NumericError);
}
