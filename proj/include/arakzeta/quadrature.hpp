#pragma once

#include <complex>
#include <span>
#include <vector>

namespace arakzeta {

struct QuadNode {
    double x;
    double w;
};

// Composite 20-point Gauss-Legendre rule on [a, b] split into equal panels.
std::vector<QuadNode> gauss_legendre_panels(double a, double b, int panels);

// Pairwise (tree) summation; the result depends only on the input order.
double pairwise_sum(std::span<const double> v);
std::complex<double> pairwise_sum(std::span<const std::complex<double>> v);

}  // namespace arakzeta
