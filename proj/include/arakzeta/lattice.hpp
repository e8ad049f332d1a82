#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace arakzeta {

using IntVec = std::vector<std::int64_t>;

struct LatticeVector {
    IntVec coords;  // coefficients in the basis the Gram matrix was given in
    double value;   // c^T G c
};

enum class Exec { serial, parallel };

// All nonzero integer c with c^T G c <= bound, sorted by (value, coords).
// The Gram matrix is LLL-reduced internally; coordinates are mapped back.
// Throws NumericError when G is not symmetric positive definite.
std::vector<LatticeVector> enumerate_vectors(const Eigen::MatrixXd& G, double bound,
                                             Exec exec = Exec::parallel);
std::vector<LatticeVector> enumerate_vectors_serial(const Eigen::MatrixXd& G, double bound);

// Values only (with multiplicity), ascending. Cheaper than enumerate_vectors.
std::vector<double> enumerate_norms(const Eigen::MatrixXd& G, double bound);

// Squared minimum of the lattice.
double lattice_minimum(const Eigen::MatrixXd& G);

// LLL reduction of a Gram matrix. Returns the reduced Gram matrix and writes
// the unimodular U with G_red = U^T G U (columns of U are the new basis).
Eigen::MatrixXd lll_reduce(const Eigen::MatrixXd& G, Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>& U,
                           double delta = 0.99);

}  // namespace arakzeta
