#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "arakzeta/arakelov.hpp"
#include "arakzeta/lattice.hpp"

namespace arakzeta {

struct ClassSpacePoint {
    int class_index = 0;
    std::vector<double> theta;  // torus coordinates in [0,1)^r
    ArakelovDivisor divisor;    // x = x0(class) + sum theta_i * unit_log_i
};

struct ClassSpaceGrid {
    int points_per_dim = 1;
    std::vector<ClassSpacePoint> points;
    std::vector<double> weights;
    double total_weight = 0.0;
};

// Degree-zero divisor on class c at torus coordinates theta.
ArakelovDivisor class_space_divisor(const NumberFieldData& F, int class_index, const std::vector<double>& theta);

// Product midpoint rule on [0,1)^r for every class, weight R / P^r. An optional
// offset shifts every theta (mod 1), for translation-invariance checks.
ClassSpaceGrid build_grid(const NumberFieldData& F, int points_per_dim, const std::vector<double>& offset = {});

using PointFunction = std::function<std::complex<double>(const ClassSpacePoint&)>;

// sum_i w_i f(p_i); f is evaluated concurrently in the parallel variant.
// Both variants reduce with the same pairwise tree, so results are identical.
std::complex<double> integrate(const ClassSpaceGrid& grid, const PointFunction& f, Exec exec = Exec::parallel);
std::complex<double> integrate_serial(const ClassSpaceGrid& grid, const PointFunction& f);

struct RefinedIntegral {
    std::complex<double> value;
    double change = 0.0;  // difference between the last two refinements
    int points_per_dim = 1;
};

// Doubles points_per_dim from start until two successive results agree to tol
// (relative to max(1, |value|)). Cap 2^14 points per dimension.
RefinedIntegral integrate_refined(const NumberFieldData& F, const PointFunction& f, double tol, int start = 16);

}  // namespace arakzeta
