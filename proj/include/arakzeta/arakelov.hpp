#pragma once

#include <Eigen/Dense>
#include <vector>

#include "arakzeta/field.hpp"

namespace arakzeta {

struct ArakelovDivisor {
    int class_index = 0;
    std::vector<double> x;  // one entry per infinite place, real places first
};

struct LatticeInvariants {
    double a = 0.0;  // squared minimum
    double b = 0.0;  // least value above a
    int nu = 0;      // number of vectors of value a
};

inline constexpr double kDefaultBand = 1e-9;

void check_divisor(const NumberFieldData& F, const ArakelovDivisor& D);

ArakelovDivisor zero_divisor(const NumberFieldData& F);
// D + D_t: adds e_v log(t)/n to every x_v.
ArakelovDivisor add_scaling(const NumberFieldData& F, const ArakelovDivisor& D, double t);

// N(D) = N(I(D))^{-1} prod_v e^{x_v}
// Isometric divisor with the unit-log coordinates of x rounded into [-1/2, 1/2].
// a, b, nu and the theta series are computed on it: Gram matrices of far
// translates are badly conditioned.
ArakelovDivisor reduce_by_units(const NumberFieldData& F, const ArakelovDivisor& D);
double arakelov_norm(const NumberFieldData& F, const ArakelovDivisor& D);

// Gram matrix of the stored ideal basis under
// ||f||^2 = sum_real |f|_v^2 e^{-2x_v} + 2 sum_complex |f|_v^2 e^{-x_v}.
Eigen::MatrixXd lattice_gram(const NumberFieldData& F, const ArakelovDivisor& D);

LatticeInvariants invariants_abnu(const NumberFieldData& F, const ArakelovDivisor& D, double band = kDefaultBand);
LatticeInvariants invariants_from_gram(const Eigen::MatrixXd& G, double band = kDefaultBand);

// Representative of [kappa] - D on a stored class. Throws CapabilityError when
// the class of d^{-1} I(D)^{-1} is not resolvable from the field data.
ArakelovDivisor kappa_minus(const NumberFieldData& F, const ArakelovDivisor& D);

double theta_k0(const NumberFieldData& F, const ArakelovDivisor& D, double tol);
double theta_k1(const NumberFieldData& F, const ArakelovDivisor& D, double tol);
double theta_from_gram(const Eigen::MatrixXd& G, double tol);

// k0/k1 - N(D) d_k^{-1/2}; |result| <= 10 tol.
double riemann_roch_residual(const NumberFieldData& F, const ArakelovDivisor& D, double tol);

}  // namespace arakzeta
