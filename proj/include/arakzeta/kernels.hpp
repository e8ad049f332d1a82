#pragma once

#include <complex>
#include <vector>

#include "arakzeta/classspace.hpp"
#include "arakzeta/quadrature.hpp"

namespace arakzeta {

// Lattice data of one grid point, enough to evaluate k0(D + D_t) for any t.
struct PointProfile {
    double weight = 0.0;
    LatticeInvariants inv;
    std::vector<double> primal;  // sorted norms of I(D), complete for scales >= primal_scale
    std::vector<double> dual;    // sorted norms of [kappa] - D, complete for scales >= dual_scale
};

struct ThetaProfiles {
    int n = 1;
    double disc_abs = 1.0;
    double theta_tol = 1e-10;
    double band = kDefaultBand;
    double primal_scale = 1.0;  // smallest t^{-2/n} the primal lists serve
    double dual_scale = 0.0;    // smallest t^{2/n} the dual lists serve; 0 = no dual lists
    std::vector<PointProfile> points;
};

// Sorted norms (with multiplicity) of all nonzero vectors whose omission would
// change sum exp(-pi * scale * v) by more than tol.
std::vector<double> complete_norm_list(const Eigen::MatrixXd& G, double scale, double tol);

ThetaProfiles build_profiles(const NumberFieldData& F, const ClassSpaceGrid& grid, double theta_tol,
                             double primal_scale, double dual_scale, Exec exec = Exec::parallel);
ThetaProfiles build_profiles_serial(const NumberFieldData& F, const ClassSpaceGrid& grid, double theta_tol,
                                    double primal_scale, double dual_scale);

struct ThetaSample {
    double minus_one = 0.0;  // k0 - 1
    double lead = 0.0;       // nu e^{-pi scale a}
    double rest = 0.0;       // minus_one - lead, summed directly
};

// Theta series of a sorted norm list at Gram scale `scale`.
ThetaSample theta_sample(const std::vector<double>& norms, double scale, double a, double band);

// a and nu at every grid point.
std::vector<LatticeInvariants> invariants_on_grid(const NumberFieldData& F, const ClassSpaceGrid& grid,
                                                  Exec exec = Exec::parallel);
std::vector<LatticeInvariants> invariants_on_grid_serial(const NumberFieldData& F, const ClassSpaceGrid& grid);

// out[j] = sum_p fn(point_p, j), reduced pairwise over p in grid order. The
// parallel variant splits over j, so both variants give identical bits.
template <class Fn>
std::vector<std::complex<double>> node_sums(const ThetaProfiles& prof, std::size_t nodes, Fn&& fn,
                                            Exec exec = Exec::parallel) {
    std::vector<std::complex<double>> out(nodes);
    const auto np = prof.points.size();
    const long long nn = static_cast<long long>(nodes);
#pragma omp parallel if (exec == Exec::parallel && nn > 1)
    {
        std::vector<std::complex<double>> buf(np);
#pragma omp for schedule(dynamic)
        for (long long j = 0; j < nn; ++j) {
            for (std::size_t p = 0; p < np; ++p) buf[p] = prof.points[p].weight * fn(prof.points[p], j);
            out[j] = pairwise_sum(std::span<const std::complex<double>>(buf));
        }
    }
    return out;
}

template <class Fn>
std::vector<std::complex<double>> node_sums_serial(const ThetaProfiles& prof, std::size_t nodes, Fn&& fn) {
    return node_sums(prof, nodes, std::forward<Fn>(fn), Exec::serial);
}

}  // namespace arakzeta
