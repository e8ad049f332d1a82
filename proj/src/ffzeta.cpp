#include "arakzeta/ffzeta.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "arakzeta/errors.hpp"
#include "json.hpp"

namespace arakzeta {

namespace {

using cplx = std::complex<double>;

bool is_prime_power(long long q) {
    if (q < 2) return false;
    long long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) return true;  // q prime
    while (q % p == 0) q /= p;
    return q == 1;
}

BiPoly T_() { return BiPoly::monomial(1, 1, 0); }
BiPoly u_() { return BiPoly::monomial(1, 0, 1); }
BiPoly one() { return BiPoly::constant(1); }

BiPoly denominator() { return (one() - T_()) * (one() - u_() * T_()); }

void check_pole(cplx den, const char* what) {
    if (std::abs(den) < 1e-12) throw PoleError(what, 0.0);
}

}  // namespace

void validate_curve(const CurveData& C) {
    if (!is_prime_power(C.q)) throw InputError("q must be a prime power");
    if (C.genus < 0) throw InputError("genus must be >= 0");
    if (C.h < 1) throw InputError("h must be >= 1");
    if (C.genus == 0 && !C.classes.empty()) throw InputError("genus 0 curve data carries no classes");
    std::map<int, int> trivial;
    for (const auto& e : C.classes) {
        if (e.degree < 0 || e.degree > 2 * C.genus - 2) throw InputError("class degree outside [0, 2g-2]");
        if (e.count < 1) throw InputError("class counts must be positive");
        if (e.h0 < 0) throw InputError("h0 must be nonnegative");
        if (e.degree == 0) {
            if (e.h0 > 1) throw InvariantError("degree0_h0", "a degree 0 class has h0 > 1");
            if (e.h0 == 1) trivial[0] += static_cast<int>(e.count);
        }
    }
    if (C.genus >= 1 && trivial[0] != 1) throw InvariantError("degree0_trivial", "exactly one degree 0 class must have h0 = 1");
}

CurveData make_p1(long long q) {
    CurveData C{q, 0, 1, {}};
    validate_curve(C);
    return C;
}

CurveData make_elliptic(long long q, long long N) {
    if (N < 1) throw InputError("point count must be positive");
    CurveData C{q, 1, N, {{0, 1, 1}}};
    if (N > 1) C.classes.push_back({0, 0, N - 1});
    validate_curve(C);
    return C;
}

CurveData parse_curve_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("curve file: ") + e.what());
    }
    try {
        CurveData C;
        C.q = j.at("q").get<long long>();
        C.genus = j.at("genus").get<int>();
        C.h = j.at("h").get<long long>();
        for (const auto& e : j.at("classes"))
            C.classes.push_back({e.at("degree").get<int>(), e.at("h0").get<int>(), e.at("count").get<long long>()});
        validate_curve(C);
        return C;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("curve file: ") + e.what());
    }
}

CurveData load_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open curve file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_curve_json(ss.str());
}

std::string curve_to_json(const CurveData& C) {
    nlohmann::json j;
    j["q"] = C.q;
    j["genus"] = C.genus;
    j["h"] = C.h;
    j["classes"] = nlohmann::json::array();
    for (const auto& e : C.classes) j["classes"].push_back({{"degree", e.degree}, {"h0", e.h0}, {"count", e.count}});
    return j.dump(2);
}

BivariateRational zeta_two_var(const CurveData& C) {
    validate_curve(C);
    const int g = C.genus;
    const int d0 = std::max(0, 2 * g - 1);
    const mpq_class h(static_cast<long>(C.h));
    // (u-1) Z (1-T)(1-uT) = sum count u^h0 T^d (1-T)(1-uT) + h u^{d0+1-g} T^{d0} (1-T) - h (1-uT)
    BiPoly N;
    for (const auto& e : C.classes) N += BiPoly::monomial(mpq_class(static_cast<long>(e.count)), e.degree, e.h0) * denominator();
    N += BiPoly::monomial(h, d0, d0 + 1 - g) * (one() - T_());
    N = N - BiPoly::constant(h) * (one() - u_() * T_());
    BiPoly P;
    if (!divide_exact(N, u_() - one(), P))
        throw InvariantError("u_minus_1_divisibility", "class counts per degree do not sum to h");
    return {P, denominator()};
}

std::vector<UPoly> extract_P(const BivariateRational& Z, int genus) {
    BiPoly P;
    if (!divide_exact(Z.num * denominator(), Z.den, P))
        throw InvariantError("P_polynomial", "Z (1-T)(1-uT) is not a polynomial");
    if (P.deg_T() > 2 * genus) throw InvariantError("P_degree", "P has T-degree above 2g");
    auto coeffs = P.coeffs_in_T();
    coeffs.resize(2 * genus + 1);
    if (coeffs[0] != UPoly{mpq_class(1)}) throw InvariantError("P0", "P_0(u) != 1");
    UPoly ug(genus + 1, mpq_class(0));
    ug[genus] = 1;
    if (coeffs[2 * genus] != ug) throw InvariantError("P2g", "P_{2g}(u) != u^g");
    for (int i = 0; i <= 2 * genus; ++i) {
        const int deg = static_cast<int>(coeffs[i].size()) - 1;
        if (2 * deg > 2 + i) throw InvariantError("P_degree_bound", "deg P_" + std::to_string(i) + " exceeds 1 + i/2");
    }
    return coeffs;
}

FunctionalEquationCheck check_functional_equation(const std::vector<UPoly>& P, int genus) {
    FunctionalEquationCheck out;
    if (static_cast<int>(P.size()) != 2 * genus + 1) {
        out.ok = false;
        out.first_bad = 0;
        return out;
    }
    for (int i = 0; i <= genus; ++i) {
        UPoly shifted(genus - i, mpq_class(0));
        shifted.insert(shifted.end(), P[i].begin(), P[i].end());
        trim(shifted);
        if (shifted != P[2 * genus - i]) {
            out.ok = false;
            out.first_bad = i;
            return out;
        }
    }
    return out;
}

URational specialize_u(const BivariateRational& Z, const mpq_class& value) {
    return {Z.num.substitute_u(value), Z.den.substitute_u(value)};
}

namespace {

cplx eval_Z(const CurveData& C, cplx T, cplx u) {
    const auto Z = zeta_two_var(C);
    const cplx den = Z.den.eval(T, u);
    check_pole(den, "evaluation at a pole of Z(T,u)");
    return Z.num.eval(T, u) / den;
}

cplx qpow(const CurveData& C, cplx e) { return std::exp(e * std::log(static_cast<double>(C.q))); }

}  // namespace

cplx zeta_GS_ff(const CurveData& C, cplx s, cplx t) {
    const double g = C.genus;
    return (qpow(C, s + t) - 1.0) * qpow(C, t * (g - 1.0)) * eval_Z(C, qpow(C, -t), qpow(C, s + t));
}

cplx zeta_GS_ff_alt(const CurveData& C, cplx s, cplx t) {
    const double g = C.genus;
    return (qpow(C, s + t) - 1.0) * qpow(C, s * (g - 1.0)) * eval_Z(C, qpow(C, -s), qpow(C, s + t));
}

cplx zeta_sw_ff(const CurveData& C, cplx s, cplx w) {
    const double g = C.genus;
    return (qpow(C, w) - 1.0) * qpow(C, -s * (1.0 - g)) * eval_Z(C, qpow(C, -s), qpow(C, w));
}

cplx zeta_classical_ff(const CurveData& C, cplx s) {
    return eval_Z(C, qpow(C, -s), static_cast<double>(C.q));
}

long long necklace_count(long long q, int m) {
    if (m < 1) throw DomainError("necklace_count needs m >= 1");
    auto mobius = [](int n) {
        int r = 1;
        for (int p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                r = -r;
            }
        return n > 1 ? -r : r;
    };
    long long sum = 0;
    for (int d = 1; d <= m; ++d)
        if (m % d == 0) {
            long long pw = 1;
            for (int i = 0; i < m / d; ++i) pw *= q;
            sum += mobius(d) * pw;
        }
    return sum / m;
}

DivisorCounts p1_effective_divisor_oracle(long long q, int d_max) {
    if (!is_prime_power(q) || q > 16) throw CapabilityError("divisor oracle supports prime powers q <= 16");
    if (d_max < 0 || d_max > 12) throw CapabilityError("divisor oracle supports d_max <= 12");
    DivisorCounts out;
    std::vector<long long> qp(d_max + 2, 1);
    for (int i = 1; i <= d_max + 1; ++i) qp[i] = qp[i - 1] * q;
    for (int d = 0; d <= d_max; ++d) {
        out.closed_form.push_back((qp[d + 1] - 1) / (q - 1));
        long long c = 0;
        for (int k = 0; k <= d; ++k) c += qp[d - k];
        out.pairs.push_back(c);
    }
    // prod over closed points (1 - T^deg)^{-1}: infinity, then N_m points of degree m
    std::vector<long long> series(d_max + 1, 0);
    series[0] = 1;
    auto multiply_geometric = [&](int m) {
        for (int d = m; d <= d_max; ++d) series[d] += series[d - m];
    };
    multiply_geometric(1);
    for (int m = 1; m <= d_max; ++m) {
        const long long N = necklace_count(q, m);
        for (long long k = 0; k < N; ++k) multiply_geometric(m);
    }
    out.euler = series;
    return out;
}

CurveData generate_rr_consistent(int genus, long long h, long long q, std::uint64_t seed) {
    if (genus < 0 || h < 1) throw InputError("generator needs genus >= 0 and h >= 1");
    CurveData C{q, genus, h, {}};
    if (genus == 0) {
        C.h = 1;
        return C;
    }
    std::mt19937_64 rng(seed);
    const int g = genus;
    std::map<std::pair<int, int>, long long> prof;
    auto add = [&](int d, int h0, long long cnt) {
        if (cnt > 0) prof[{d, h0}] += cnt;
    };
    // degree 0 and its partner 2g-2: the trivial class pairs with the canonical class
    add(0, 1, 1);
    add(2 * g - 2, g, 1);
    add(0, 0, h - 1);
    add(2 * g - 2, g - 1, h - 1);
    if (g == 1) {
        // degrees 0 and 2g-2 coincide; undo the double count
        prof.clear();
        add(0, 1, 1);
        add(0, 0, h - 1);
    }
    for (int d = 1; d < g - 1; ++d) {
        std::uniform_int_distribution<int> pick(0, 1 + d / 2);
        for (long long k = 0; k < h; ++k) {
            const int h0 = pick(rng);
            add(d, h0, 1);
            add(2 * g - 2 - d, h0 + g - 1 - d, 1);
        }
    }
    if (g >= 2) {
        const int d = g - 1;
        std::uniform_int_distribution<int> pick(0, 1 + d / 2);
        for (long long k = 0; k < h; ++k) add(d, pick(rng), 1);
    }
    for (const auto& [key, cnt] : prof) C.classes.push_back({key.first, key.second, cnt});
    validate_curve(C);
    return C;
}

}  // namespace arakzeta
