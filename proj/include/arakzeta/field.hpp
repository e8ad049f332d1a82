#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace arakzeta {

struct IdealLatticeBasis {
    double norm = 1.0;
    // Row i: image of the i-th Z-basis element, real places first, then
    // (Re, Im) for each complex place.
    Eigen::MatrixXd embedding;
};

// d^{-1} * a_c^{-1} = gamma * a_{dual_class}; log_gamma[v] = e_v log|gamma|_v.
// Needed to evaluate k^1 on class c.
struct KappaPairing {
    int dual_class = 0;
    std::vector<double> log_gamma;
};

struct NumberFieldData {
    int degree_n = 1;
    int r1 = 1;
    int r2 = 0;
    int unit_rank_r = 0;
    double disc_abs = 1.0;
    int mu_count = 2;
    int class_number_h = 1;
    double regulator = 1.0;
    std::vector<IdealLatticeBasis> ideal_classes;
    std::vector<std::vector<double>> unit_logs;
    double different_norm = 1.0;
    std::vector<KappaPairing> kappa;  // empty, or one entry per class
    long long discriminant = 0;       // signed field discriminant; 0 when unknown

    int places() const { return r1 + r2; }
    int local_degree(int v) const { return v < r1 ? 1 : 2; }
};

NumberFieldData make_rationals();

// Q(sqrt m). m squarefree, m != 0, 1. Class group from ideals under the
// Minkowski bound, fundamental unit from the continued fraction of the
// standard generator of the ring of integers.
NumberFieldData make_quadratic(long long m);

// Throws InvariantError naming the first failing check.
void validate(const NumberFieldData& F);

NumberFieldData parse_field_json(const std::string& text);
NumberFieldData load_field_file(const std::string& path);
std::string field_to_json(const NumberFieldData& F);
void save_field_file(const NumberFieldData& F, const std::string& path);

bool same_field_data(const NumberFieldData& a, const NumberFieldData& b);

// Quadratic helpers exposed for tests.
bool is_squarefree(long long m);
long long fundamental_discriminant(long long m);

}  // namespace arakzeta
