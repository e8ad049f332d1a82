#include "arakzeta/arakelov.hpp"

#include <cmath>
#include <string>

#include "arakzeta/errors.hpp"
#include "arakzeta/lattice.hpp"
#include "arakzeta/special.hpp"

namespace arakzeta {

void check_divisor(const NumberFieldData& F, const ArakelovDivisor& D) {
    if (D.class_index < 0 || D.class_index >= F.class_number_h)
        throw InputError("divisor class index " + std::to_string(D.class_index) + " out of range");
    if (static_cast<int>(D.x.size()) != F.places()) throw InputError("divisor needs one x_v per infinite place");
    for (double v : D.x)
        if (!std::isfinite(v)) throw InputError("divisor has a non-finite x_v");
}

ArakelovDivisor zero_divisor(const NumberFieldData& F) { return {0, std::vector<double>(F.places(), 0.0)}; }

ArakelovDivisor add_scaling(const NumberFieldData& F, const ArakelovDivisor& D, double t) {
    ArakelovDivisor out = D;
    const double lt = std::log(t);
    for (int v = 0; v < F.places(); ++v) out.x[v] += F.local_degree(v) * lt / F.degree_n;
    return out;
}

double arakelov_norm(const NumberFieldData& F, const ArakelovDivisor& D) {
    check_divisor(F, D);
    double s = 0.0;
    for (double v : D.x) s += v;
    return std::exp(s) / F.ideal_classes[D.class_index].norm;
}

Eigen::MatrixXd lattice_gram(const NumberFieldData& F, const ArakelovDivisor& D) {
    check_divisor(F, D);
    const Eigen::MatrixXd& E = F.ideal_classes[D.class_index].embedding;
    Eigen::VectorXd w(F.degree_n);
    for (int v = 0; v < F.r1; ++v) w(v) = std::exp(-2.0 * D.x[v]);
    for (int v = F.r1; v < F.places(); ++v) {
        const int j = F.r1 + 2 * (v - F.r1);
        w(j) = w(j + 1) = 2.0 * std::exp(-D.x[v]);
    }
    Eigen::MatrixXd G = E * w.asDiagonal() * E.transpose();
    return 0.5 * (G + G.transpose());
}

LatticeInvariants invariants_from_gram(const Eigen::MatrixXd& G, double band) {
    const double a = lattice_minimum(G);
    const double cut = a * (1.0 + band);
    const auto v = enumerate_norms(G, 4.0 * cut);
    LatticeInvariants out;
    out.a = a;
    for (double x : v) {
        if (x <= cut)
            ++out.nu;
        else {
            out.b = x;
            break;
        }
    }
    if (out.b == 0.0) throw NumericError("invariants_abnu: no value above the minimum within 4a");
    return out;
}

ArakelovDivisor reduce_by_units(const NumberFieldData& F, const ArakelovDivisor& D) {
    check_divisor(F, D);
    const int r = F.unit_rank_r;
    if (r == 0) return D;
    Eigen::MatrixXd U(F.places(), r);
    Eigen::VectorXd x(F.places());
    for (int v = 0; v < F.places(); ++v) {
        x(v) = D.x[v];
        for (int i = 0; i < r; ++i) U(v, i) = F.unit_logs[i][v];
    }
    const Eigen::VectorXd theta = U.colPivHouseholderQr().solve(x);
    ArakelovDivisor out = D;
    for (int i = 0; i < r; ++i) {
        const double k = std::round(theta(i));
        if (k == 0.0) continue;
        for (int v = 0; v < F.places(); ++v) out.x[v] -= k * F.unit_logs[i][v];
    }
    return out;
}

LatticeInvariants invariants_abnu(const NumberFieldData& F, const ArakelovDivisor& D, double band) {
    return invariants_from_gram(lattice_gram(F, reduce_by_units(F, D)), band);
}

ArakelovDivisor kappa_minus(const NumberFieldData& F, const ArakelovDivisor& D) {
    check_divisor(F, D);
    ArakelovDivisor out;
    out.x.resize(D.x.size());
    if (!F.kappa.empty()) {
        const KappaPairing& k = F.kappa[D.class_index];
        out.class_index = k.dual_class;
        for (std::size_t v = 0; v < D.x.size(); ++v) out.x[v] = -D.x[v] - k.log_gamma[v];
        return out;
    }
    // Without a table: h = 1 and n <= 2, where the different is generated by
    // sqrt(D), whose absolute value is sqrt(d_k) at every place.
    if (F.class_number_h == 1 && F.degree_n <= 2) {
        out.class_index = 0;
        const double ld = std::log(F.disc_abs);
        for (int v = 0; v < F.places(); ++v) out.x[v] = -D.x[v] + F.local_degree(v) * ld / F.degree_n;
        return out;
    }
    throw CapabilityError("k1: no stored representative for the class of d^{-1} I(D)^{-1} (class " +
                          std::to_string(D.class_index) + "); add a kappa_class table to the field file");
}

double theta_from_gram(const Eigen::MatrixXd& G, double tol) {
    if (!(tol > 0.0 && tol <= 1e-3)) throw DomainError("theta: tol must lie in (0, 1e-3]");
    const double a = lattice_minimum(G);
    const double lambda = -std::log(tol / 4.0);
    const double B0 = std::max(4.0 * a, lambda / kPi);
    auto sum_upto = [](const std::vector<double>& v, double lo, double hi) {
        double s = 0.0;
        for (std::size_t i = v.size(); i-- > 0;)
            if (v[i] > lo && v[i] <= hi) s += std::exp(-kPi * v[i]);
        return s;
    };
    double B = B0;
    for (;;) {
        const double B2 = 2.0 * B;
        if (B2 > 1024.0 * B0) throw NumericError("theta: shell doubling exceeded cap");
        const auto v = enumerate_norms(G, B2);
        const double shell = sum_upto(v, B, B2);
        if (shell < tol / 2.0) return 1.0 + sum_upto(v, 0.0, B2);
        B = B2;
    }
}

double theta_k0(const NumberFieldData& F, const ArakelovDivisor& D, double tol) {
    return theta_from_gram(lattice_gram(F, reduce_by_units(F, D)), tol);
}

double theta_k1(const NumberFieldData& F, const ArakelovDivisor& D, double tol) {
    return theta_k0(F, kappa_minus(F, D), tol);
}

double riemann_roch_residual(const NumberFieldData& F, const ArakelovDivisor& D, double tol) {
    const double expect = arakelov_norm(F, D) / std::sqrt(F.disc_abs);
    const double t0 = 0.5 * tol;
    const double t1 = std::min(1e-3, 0.5 * tol / std::max(1.0, expect));
    const double k0 = theta_k0(F, D, t0);
    const double k1 = theta_k1(F, D, t1);
    return k0 / k1 - expect;
}

}  // namespace arakzeta
