#include <algorithm>
#include <cmath>
#include <map>

#include "arakzeta/errors.hpp"
#include "arakzeta/ffzeta.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arakzeta;
using cplx = std::complex<double>;

namespace {

mpq_class Q(long long v) { return mpq_class(static_cast<long>(v)); }

// Power series of num/den in T up to degree n (den(0) = 1).
std::vector<mpq_class> series(const UPoly& num, const UPoly& den, int n) {
    std::vector<mpq_class> out(n + 1);
    for (int k = 0; k <= n; ++k) {
        mpq_class c = k < static_cast<int>(num.size()) ? num[k] : mpq_class(0);
        for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j) c -= den[j] * out[k - j];
        out[k] = c / den[0];
    }
    return out;
}

// Coefficient of T^d in the class sum: sum over classes of degree d of (u^{h0} - 1)/(u - 1).
mpq_class class_sum_coeff(const CurveData& C, int d, const mpq_class& u) {
    auto geo = [&](int h0) {
        mpq_class s = 0, p = 1;
        for (int i = 0; i < h0; ++i, p *= u) s += p;
        return s;
    };
    const int g = C.genus;
    if (d > 2 * g - 2) return Q(C.h) * geo(d + 1 - g);
    mpq_class s = 0;
    for (const auto& e : C.classes)
        if (e.degree == d) s += Q(e.count) * geo(e.h0);
    return s;
}

// Monic irreducible polynomials of degree m over F_p by sieving products.
long long irreducible_brute(int p, int m) {
    auto encode = [&](const std::vector<int>& c) {
        long long k = 0;
        for (std::size_t i = c.size(); i-- > 0;) k = k * p + c[i];
        return k;
    };
    std::vector<std::vector<std::vector<int>>> monic(m + 1);
    for (int d = 1; d <= m; ++d) {
        long long total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (long long k = 0; k < total; ++k) {
            std::vector<int> c(d + 1);
            long long x = k;
            for (int i = 0; i < d; ++i, x /= p) c[i] = static_cast<int>(x % p);
            c[d] = 1;
            monic[d].push_back(c);
        }
    }
    std::map<long long, bool> reducible;
    for (int a = 1; a < m; ++a)
        for (const auto& f : monic[a])
            for (const auto& g : monic[m - a]) {
                std::vector<int> h(m + 1, 0);
                for (std::size_t i = 0; i < f.size(); ++i)
                    for (std::size_t j = 0; j < g.size(); ++j) h[i + j] = (h[i + j] + f[i] * g[j]) % p;
                reducible[encode(h)] = true;
            }
    return static_cast<long long>(monic[m].size() - reducible.size());
}

std::vector<CurveData> sample_curves() {
    std::vector<CurveData> out = {make_p1(2), make_p1(9), make_elliptic(2, 5), make_elliptic(7, 10)};
    for (int i = 0; i < 12; ++i) out.push_back(generate_rr_consistent(1 + i % 3, 1 + i % 5, i % 2 ? 3 : 4, 100 + i));
    out.push_back(load_curve_file(oracle::data_path("genus2_q5.json")));
    return out;
}

}  // namespace

TEST_CASE("Z(T, u) expands to the class sum") {
    for (const auto& C : sample_curves()) {
        const auto Z = zeta_two_var(C);
        for (mpq_class u : {mpq_class(2), mpq_class(3), mpq_class(5, 2), mpq_class(7)}) {
            const auto r = specialize_u(Z, u);
            const auto ser = series(r.num, r.den, 14);
            for (int d = 0; d <= 14; ++d) CHECK(ser[d] == class_sum_coeff(C, d, u));
        }
    }
}

TEST_CASE("P^1 and elliptic curves") {
    const auto Z = zeta_two_var(make_p1(5));
    const auto P = extract_P(Z, 0);
    REQUIRE(P.size() == 1);
    CHECK(P[0] == UPoly{1});
    for (long long N : {1LL, 3LL, 5LL, 9LL}) {
        const auto E = make_elliptic(4, N);
        const auto PE = extract_P(zeta_two_var(E), 1);
        REQUIRE(PE.size() == 3);
        CHECK(PE[0] == UPoly{1});
        CHECK(PE[1] == UPoly{Q(N - 1), -1});
        CHECK(PE[2] == UPoly{0, 1});
        // classical zeta at u = q: (1 + (N - 1 - q) T + q T^2) / ((1 - T)(1 - qT))
        const auto cl = specialize_u(zeta_two_var(E), 4);
        const UPoly expect = {1, Q(N - 1 - 4), 4};
        CHECK(series(cl.num, cl.den, 10) == series(expect, UPoly{1, -5, 4}, 10));
    }
    CHECK(BiPoly::from_coeffs_in_T(extract_P(zeta_two_var(make_elliptic(2, 5)), 1)).to_string() ==
          "1 + (4 - u)*T + u*T^2");
}

TEST_CASE("generated curves satisfy the exact identities") {
    for (int i = 0; i < 50; ++i) {
        const int g = i % 4;
        const long long q = std::vector<long long>{2, 3, 4, 5, 7, 8, 9}[i % 7];
        const auto C = g == 0 ? make_p1(q) : generate_rr_consistent(g, 1 + i % 6, q, 1000 + i);
        CHECK_NOTHROW(validate_curve(C));
        const auto Z = zeta_two_var(C);
        const auto P = extract_P(Z, g);
        CHECK(P.size() == static_cast<std::size_t>(2 * g + 1));
        for (std::size_t k = 0; k < P.size(); ++k) CHECK(static_cast<int>(P[k].size()) - 1 <= 1 + static_cast<int>(k) / 2);
        CHECK(check_functional_equation(P, g).ok);
        const auto cl = specialize_u(Z, mpq_class(static_cast<long>(q)));
        for (const auto& c : cl.num) CHECK(c.get_den() == 1);
        // Riemann-Roch pairing: h0 multiset at d maps to h0 - (d + 1 - g) at 2g - 2 - d
        for (int d = 0; d <= 2 * g - 2; ++d) {
            std::map<int, long long> here, there;
            for (const auto& e : C.classes) {
                if (e.degree == d) here[e.h0 - (d + 1 - g)] += e.count;
                if (e.degree == 2 * g - 2 - d) there[e.h0] += e.count;
            }
            CHECK(here == there);
            long long total = 0;
            for (const auto& kv : here) total += kv.second;
            CHECK(total == C.h);
        }
    }
}

TEST_CASE("functional equation check detects corruption") {
    auto P = extract_P(zeta_two_var(generate_rr_consistent(2, 3, 3, 9)), 2);
    P[3][0] += 1;
    const auto r = check_functional_equation(P, 2);
    CHECK_FALSE(r.ok);
    CHECK(r.first_bad == 1);
}

TEST_CASE("inconsistent class data is rejected") {
    auto C = make_elliptic(3, 4);
    C.h = 5;
    try {
        zeta_two_var(C);
        FAIL("expected an invariant error");
    } catch (const InvariantError& e) {
        CHECK(e.check() == "u_minus_1_divisibility");
    }
    auto D = make_elliptic(3, 4);
    D.classes.push_back({0, 1, 1});
    CHECK_THROWS_AS(validate_curve(D), InvariantError);
    CHECK_THROWS_AS(make_p1(6), InputError);
    CHECK_THROWS_AS(make_elliptic(2, 0), InputError);
    CHECK_THROWS_AS(parse_curve_json("{\"q\": 4}"), InputError);
    CHECK_THROWS_AS(parse_curve_json("[1,"), InputError);
    CHECK_THROWS_AS(load_curve_file("/nonexistent/curve.json"), InputError);
}

TEST_CASE("curve file round trip") {
    for (const auto& C : sample_curves()) {
        const auto D = parse_curve_json(curve_to_json(C));
        CHECK(D.q == C.q);
        CHECK(D.genus == C.genus);
        CHECK(D.h == C.h);
        CHECK(same_rational(zeta_two_var(C), zeta_two_var(D)));
    }
}

TEST_CASE("numerical identities at random points") {
    oracle::Gen gen(70);
    for (const auto& C : sample_curves()) {
        const double q = static_cast<double>(C.q), g = C.genus;
        for (int i = 0; i < 20; ++i) {
            const cplx s = gen.complex_in(-2.0, 3.0, -2.0, 2.0), t = gen.complex_in(-2.0, 3.0, -2.0, 2.0);
            const cplx a = zeta_GS_ff(C, s, t);
            CHECK(std::abs(a - zeta_GS_ff(C, t, s)) <= 1e-12 * std::abs(a));
            CHECK(std::abs(a - zeta_GS_ff_alt(C, s, t)) <= 1e-12 * std::abs(a));
            const cplx w = s + t;
            const cplx z = zeta_sw_ff(C, s, w);
            CHECK(std::abs(z - a) <= 1e-12 * std::abs(a));
            CHECK(std::abs(z - zeta_sw_ff(C, w - s, w)) <= 1e-12 * std::abs(z));
            const cplx cl = zeta_classical_ff(C, s);
            const cplx e10 = (q - 1.0) * std::exp(s * (g - 1.0) * std::log(q)) * cl;
            CHECK(std::abs(zeta_GS_ff(C, s, 1.0 - s) - e10) <= 1e-12 * std::abs(e10));
            const cplx e14 = (q - 1.0) * std::exp(-s * (1.0 - g) * std::log(q)) * cl;
            CHECK(std::abs(zeta_sw_ff(C, s, 1.0) - e14) <= 1e-12 * std::abs(e14));
        }
    }
    CHECK_THROWS_AS(zeta_classical_ff(make_p1(2), 0.0), PoleError);
}

TEST_CASE("effective divisors of P^1") {
    for (long long q : {2LL, 3LL, 4LL, 5LL}) {
        const auto d = p1_effective_divisor_oracle(q, 12);
        REQUIRE(d.closed_form.size() == 13);
        CHECK(d.closed_form == d.pairs);
        CHECK(d.closed_form == d.euler);
        const auto r = specialize_u(zeta_two_var(make_p1(q)), mpq_class(static_cast<long>(q)));
        const auto ser = series(r.num, r.den, 12);
        for (int k = 0; k <= 12; ++k) CHECK(ser[k] == Q(d.closed_form[k]));
    }
    const auto d2 = p1_effective_divisor_oracle(2, 2);
    CHECK(d2.closed_form[1] == 3);
    CHECK(d2.closed_form[2] == 7);
    CHECK_THROWS(p1_effective_divisor_oracle(32, 3));
    CHECK_THROWS(p1_effective_divisor_oracle(2, 13));
}

TEST_CASE("necklace counts match a brute-force irreducibility sieve") {
    for (int m = 1; m <= 8; ++m) CHECK(necklace_count(2, m) == irreducible_brute(2, m));
    for (int m = 1; m <= 5; ++m) CHECK(necklace_count(3, m) == irreducible_brute(3, m));
    for (int m = 1; m <= 3; ++m) CHECK(necklace_count(5, m) == irreducible_brute(5, m));
}
