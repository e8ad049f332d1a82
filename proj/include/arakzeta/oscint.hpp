#pragma once

#include <complex>
#include <vector>

#include "arakzeta/classspace.hpp"

namespace arakzeta {

// Integrand (sum_i c_i e^{-nu_i x_i})^{-s} on the hyperplane sum x_i = 0.
struct HyperplaneIntegralSpec {
    std::vector<double> c;
    std::vector<int> nu;

    int N() const { return static_cast<int>(c.size()); }
    double q_exp() const;
};

void check_spec(const HyperplaneIntegralSpec& spec);

// q (prod nu_i)^{-1} (prod c_i^{q/nu_i})^{-s} Gamma(s)^{-1} prod Gamma(q s / nu_i).
std::complex<double> hyperplane_integral_closed(const HyperplaneIntegralSpec& spec, std::complex<double> s);

struct NumericIntegral {
    std::complex<double> value;
    double change = 0.0;  // difference between the last two step halvings
    double radius = 0.0;  // truncation radius in the sup norm
};

// Sinh-mapped trapezoid rule on the chart that drops coordinate `drop`.
// Re s >= 1, N <= 4.
NumericIntegral hyperplane_integral_numeric(const HyperplaneIntegralSpec& spec, std::complex<double> s, double tol,
                                            int drop = -1);

// Truncation radius R with the integrand tail outside |x|_inf <= R below tol.
double hyperplane_truncation_radius(const HyperplaneIntegralSpec& spec, double re_s, double tol);

// The spec the unit-torus integral of a field reduces to near D = 0:
// c = 1, nu = 2 per real place; c = 2, nu = 1 per complex place.
HyperplaneIntegralSpec field_hyperplane_spec(const NumberFieldData& F);

// For x with sum x_i = 0: max x_i >= |x|_inf/(N-1) and min x_i <= -|x|_inf/(N-1).
bool extreme_coordinate_bound_holds(const std::vector<double>& x);

double alpha_k(const NumberFieldData& F);

std::complex<double> torus_integral_closed(const NumberFieldData& F, std::complex<double> s);

// Integrals over CH^1_0 from precomputed invariants at the grid points.
std::complex<double> C_integral(const ClassSpaceGrid& grid, const std::vector<LatticeInvariants>& inv,
                                std::complex<double> s);
std::complex<double> C_integral(const NumberFieldData& F, const ClassSpaceGrid& grid, std::complex<double> s);

// C(s) restricted to principal-class points whose torus coordinates lie
// within `radius` (sup norm, mod 1) of 0.
std::complex<double> C_integral_local(const ClassSpaceGrid& grid, const std::vector<LatticeInvariants>& inv,
                                      std::complex<double> s, double radius);

// C(s) s^{r/2} n^s / (|mu| alpha_k).
std::complex<double> asymptotic_ratio(const NumberFieldData& F, std::complex<double> C, std::complex<double> s);

// (n/2) pi^{-ns/2} Gamma(ns/2) C(ns/2), summed in log space.
std::complex<double> A_factor(const NumberFieldData& F, const ClassSpaceGrid& grid,
                              const std::vector<LatticeInvariants>& inv, std::complex<double> s);
std::complex<double> A_factor(const NumberFieldData& F, const ClassSpaceGrid& grid, std::complex<double> s);

std::complex<double> C_tilde(const NumberFieldData& F, const ClassSpaceGrid& grid,
                             const std::vector<LatticeInvariants>& inv, std::complex<double> s);
std::complex<double> C_tilde(const NumberFieldData& F, const ClassSpaceGrid& grid, std::complex<double> s);

}  // namespace arakzeta
