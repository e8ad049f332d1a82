#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "arakzeta/bipoly.hpp"

namespace arakzeta {

struct ClassEntry {
    int degree = 0;
    int h0 = 0;
    long long count = 0;
};

// Degree and h0 profile of the divisor classes of a curve over F_q with
// 0 <= degree <= 2g - 2.
struct CurveData {
    long long q = 2;
    int genus = 0;
    long long h = 1;
    std::vector<ClassEntry> classes;
};

// Structural checks; the per-degree count sums are checked by the exact
// division in zeta_two_var.
void validate_curve(const CurveData& C);

CurveData make_p1(long long q);
// Elliptic curve with N rational points: h = N.
CurveData make_elliptic(long long q, long long N);

CurveData parse_curve_json(const std::string& text);
CurveData load_curve_file(const std::string& path);
std::string curve_to_json(const CurveData& C);

// Z_X(T,u) = P(T,u) / ((1 - T)(1 - uT)). Throws InvariantError when the
// numerator is not divisible by u - 1.
BivariateRational zeta_two_var(const CurveData& C);

// P_0 .. P_{2g}; checks P_0 = 1, P_{2g} = u^g and deg P_i <= 1 + i/2.
std::vector<UPoly> extract_P(const BivariateRational& Z, int genus);

struct FunctionalEquationCheck {
    bool ok = true;
    int first_bad = -1;
};
// P_{2g-i} = u^{g-i} P_i for 0 <= i <= g.
FunctionalEquationCheck check_functional_equation(const std::vector<UPoly>& P, int genus);

struct URational {
    UPoly num;
    UPoly den;
};
URational specialize_u(const BivariateRational& Z, const mpq_class& value);

std::complex<double> zeta_GS_ff(const CurveData& C, std::complex<double> s, std::complex<double> t);
// The second expression, through Z(q^{-s}, q^{s+t}).
std::complex<double> zeta_GS_ff_alt(const CurveData& C, std::complex<double> s, std::complex<double> t);
std::complex<double> zeta_sw_ff(const CurveData& C, std::complex<double> s, std::complex<double> w);
// Classical zeta Z_X(q^{-s}) = Z(q^{-s}, q).
std::complex<double> zeta_classical_ff(const CurveData& C, std::complex<double> s);

struct DivisorCounts {
    std::vector<long long> closed_form;  // (q^{d+1} - 1)/(q - 1)
    std::vector<long long> pairs;        // sum over degree k at infinity of monic polynomials of degree d - k
    std::vector<long long> euler;        // coefficients of the Euler product over closed points
};

// Number of monic irreducible polynomials of degree m over F_q.
long long necklace_count(long long q, int m);

// Effective divisors of P^1 over F_q by degree, three ways. q <= 16, d_max <= 12.
DivisorCounts p1_effective_divisor_oracle(long long q, int d_max);

// Random class data satisfying h0(D) - h0(K - D) = deg D + 1 - g and
// Clifford's bound, with one trivial class in degree 0.
CurveData generate_rr_consistent(int genus, long long h, long long q, std::uint64_t seed);

}  // namespace arakzeta
