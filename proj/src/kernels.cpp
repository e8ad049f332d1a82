#include "arakzeta/kernels.hpp"

#include <cmath>

#include "arakzeta/errors.hpp"
#include "arakzeta/lattice.hpp"
#include "arakzeta/special.hpp"

namespace arakzeta {

std::vector<double> complete_norm_list(const Eigen::MatrixXd& G, double scale, double tol) {
    const double a = lattice_minimum(G);
    const double B0 = std::max(4.0 * a, -std::log(tol / 4.0) / (kPi * scale));
    double B = B0;
    for (;;) {
        const double B2 = 2.0 * B;
        if (B2 > 1024.0 * B0) throw NumericError("norm list: shell doubling exceeded cap");
        auto v = enumerate_norms(G, B2);
        double shell = 0.0;
        for (std::size_t i = v.size(); i-- > 0 && v[i] > B;) shell += std::exp(-kPi * scale * v[i]);
        if (shell < tol / 2.0) return v;
        B = B2;
    }
}

namespace {

PointProfile profile_at(const NumberFieldData& F, const ClassSpacePoint& pt, double w, double tol,
                        double primal_scale, double dual_scale, double band) {
    PointProfile p;
    p.weight = w;
    const Eigen::MatrixXd G = lattice_gram(F, pt.divisor);
    p.inv = invariants_from_gram(G, band);
    p.primal = complete_norm_list(G, primal_scale, tol);
    if (dual_scale > 0.0) p.dual = complete_norm_list(lattice_gram(F, kappa_minus(F, pt.divisor)), dual_scale, tol);
    return p;
}

ThetaProfiles build_impl(const NumberFieldData& F, const ClassSpaceGrid& grid, double tol, double primal_scale,
                         double dual_scale, bool parallel) {
    if (!(tol > 0.0 && tol <= 1e-3)) throw DomainError("theta_tol must lie in (0, 1e-3]");
    ThetaProfiles prof;
    prof.n = F.degree_n;
    prof.disc_abs = F.disc_abs;
    prof.theta_tol = tol;
    prof.primal_scale = primal_scale;
    prof.dual_scale = dual_scale;
    const auto np = static_cast<long long>(grid.points.size());
    prof.points.resize(np);
#pragma omp parallel for schedule(dynamic) if (parallel && np > 1)
    for (long long i = 0; i < np; ++i)
        prof.points[i] = profile_at(F, grid.points[i], grid.weights[i], tol, primal_scale, dual_scale, prof.band);
    return prof;
}

std::vector<LatticeInvariants> inv_impl(const NumberFieldData& F, const ClassSpaceGrid& grid, bool parallel) {
    const auto np = static_cast<long long>(grid.points.size());
    std::vector<LatticeInvariants> out(np);
#pragma omp parallel for schedule(dynamic) if (parallel && np > 1)
    for (long long i = 0; i < np; ++i) out[i] = invariants_abnu(F, grid.points[i].divisor);
    return out;
}

}  // namespace

ThetaProfiles build_profiles(const NumberFieldData& F, const ClassSpaceGrid& grid, double tol, double primal_scale,
                             double dual_scale, Exec exec) {
    return build_impl(F, grid, tol, primal_scale, dual_scale, exec == Exec::parallel);
}

ThetaProfiles build_profiles_serial(const NumberFieldData& F, const ClassSpaceGrid& grid, double tol,
                                    double primal_scale, double dual_scale) {
    return build_impl(F, grid, tol, primal_scale, dual_scale, false);
}

ThetaSample theta_sample(const std::vector<double>& norms, double scale, double a, double band) {
    ThetaSample s;
    if (norms.empty()) return s;
    const double cut = a * (1.0 + band);
    const double v0 = norms.front();
    // terms below e^{-60} relative to the leading one are dropped
    std::size_t end = 0;
    while (end < norms.size() && kPi * scale * (norms[end] - v0) < 60.0) ++end;
    for (std::size_t i = end; i-- > 0;) {
        const double t = std::exp(-kPi * scale * norms[i]);
        if (norms[i] <= cut)
            s.lead += t;
        else
            s.rest += t;
    }
    s.minus_one = s.lead + s.rest;
    return s;
}

std::vector<LatticeInvariants> invariants_on_grid(const NumberFieldData& F, const ClassSpaceGrid& grid, Exec exec) {
    return inv_impl(F, grid, exec == Exec::parallel);
}

std::vector<LatticeInvariants> invariants_on_grid_serial(const NumberFieldData& F, const ClassSpaceGrid& grid) {
    return inv_impl(F, grid, false);
}

}  // namespace arakzeta
