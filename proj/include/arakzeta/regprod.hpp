#pragma once

#include <complex>
#include <vector>

namespace arakzeta {

struct RegTerm {
    std::complex<double> a;  // nonzero; branch arg in (-pi, pi]
    int m = 1;
};

// Arithmetic progression z + c*nu for nu >= nu0, each with multiplicity m.
struct RegTail {
    std::complex<double> z;
    std::complex<double> c;
    long long nu0 = 0;
    int m = 1;
};

struct RegularizedSequence {
    std::vector<RegTerm> terms;
    std::vector<RegTail> tails;
};

// Moves leading terms of every tail into the finite list until each tail is
// c * (w + nu'), nu' >= 0, with Re w > 0 and principal branches compatible:
// arg c + arg(w + nu') stays in (-pi, pi] for all nu'. Throws DomainError on
// a zero term or a term on the branch cut boundary ambiguity.
RegularizedSequence normalize_tails(const RegularizedSequence& seq);

struct RegProduct {
    std::complex<double> value;       // exp(-D'(0))
    std::complex<double> log_value;   // -D'(0)
    std::complex<double> d0;          // D(0)
};

// reg prod of alpha * a_nu, alpha > 0.
RegProduct reg_product(const RegularizedSequence& seq, double alpha);

// Right side of Lerch's formula: alpha^{1/2 - z} sqrt(2 pi) / Gamma(z).
std::complex<double> lerch_closed(double alpha, std::complex<double> z);

// reg prod_{nu >= 0} (1/2pi)(s + 2nu) * Gamma_R(s) - 1.
std::complex<double> gamma_R_reg_check(std::complex<double> s);
// reg prod_{nu >= 0} (1/2pi)(s + nu) * Gamma_C(s) - 1.
std::complex<double> gamma_C_reg_check(std::complex<double> s);

// reg prod_{nu in Z} alpha (s - rho0 - 2 pi i nu / log q) with multiplicity m.
RegProduct lattice_family_product(double q, std::complex<double> rho0, std::complex<double> s, double alpha, int m);

// alpha-regularized candidate for Z_{P^1}(q^{-s}, q^w) from its two pole
// families, minus 1/((1 - q^{-s})(1 - q^{w-s})).
std::complex<double> ff_regularization_check(double q, std::complex<double> w, std::complex<double> s, double alpha);

// Roots of sum_i coeffs[i] T^i (Durand-Kerner, polished by Newton).
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coeffs);

// Same check for a curve: P(T) has coefficients p_coeffs (at u = q^w, with
// P(0) = 1); zero families come from the inverse roots of P. Returns the
// candidate minus P(q^{-s}) / ((1 - q^{-s})(1 - q^{w-s})).
std::complex<double> curve_regularization_check(double q, std::complex<double> w, std::complex<double> s,
                                                const std::vector<std::complex<double>>& p_coeffs, double alpha);

}  // namespace arakzeta
