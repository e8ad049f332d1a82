#include "arakzeta/classspace.hpp"

#include <cmath>

#include "arakzeta/errors.hpp"
#include "arakzeta/quadrature.hpp"

namespace arakzeta {

ArakelovDivisor class_space_divisor(const NumberFieldData& F, int class_index, const std::vector<double>& theta) {
    if (class_index < 0 || class_index >= F.class_number_h) throw InputError("class index out of range");
    if (static_cast<int>(theta.size()) != F.unit_rank_r) throw InputError("theta needs r coordinates");
    ArakelovDivisor D;
    D.class_index = class_index;
    D.x.assign(F.places(), 0.0);
    const double ln = std::log(F.ideal_classes[class_index].norm);
    for (int v = 0; v < F.places(); ++v) {
        double x = F.local_degree(v) * ln / F.degree_n;
        for (int i = 0; i < F.unit_rank_r; ++i) x += theta[i] * F.unit_logs[i][v];
        D.x[v] = x;
    }
    return D;
}

ClassSpaceGrid build_grid(const NumberFieldData& F, int P, const std::vector<double>& offset) {
    if (P < 1) throw InputError("build_grid: points_per_dim must be >= 1");
    const int r = F.unit_rank_r;
    if (!offset.empty() && static_cast<int>(offset.size()) != r) throw InputError("build_grid: offset needs r entries");
    double cells = 1.0;
    for (int i = 0; i < r; ++i) cells *= P;
    if (cells > 5e7) throw CapabilityError("build_grid: grid too large");
    const long long per_class = static_cast<long long>(cells);
    const double w = F.regulator / cells;

    ClassSpaceGrid g;
    g.points_per_dim = r == 0 ? 1 : P;
    for (int c = 0; c < F.class_number_h; ++c) {
        for (long long k = 0; k < per_class; ++k) {
            std::vector<double> theta(r);
            long long idx = k;
            for (int i = 0; i < r; ++i) {
                double t = ((idx % P) + 0.5) / P;
                idx /= P;
                if (!offset.empty()) t -= std::floor(t + offset[i]) - offset[i];
                theta[i] = t;
            }
            ClassSpacePoint p;
            p.class_index = c;
            p.divisor = class_space_divisor(F, c, theta);
            p.theta = std::move(theta);
            g.points.push_back(std::move(p));
            g.weights.push_back(w);
        }
    }
    g.total_weight = pairwise_sum(std::span<const double>(g.weights));
    return g;
}

std::complex<double> integrate(const ClassSpaceGrid& grid, const PointFunction& f, Exec exec) {
    const auto n = static_cast<long long>(grid.points.size());
    std::vector<std::complex<double>> terms(n);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel && n > 1)
    for (long long i = 0; i < n; ++i) terms[i] = grid.weights[i] * f(grid.points[i]);
    return pairwise_sum(std::span<const std::complex<double>>(terms));
}

std::complex<double> integrate_serial(const ClassSpaceGrid& grid, const PointFunction& f) {
    return integrate(grid, f, Exec::serial);
}

RefinedIntegral integrate_refined(const NumberFieldData& F, const PointFunction& f, double tol, int start) {
    RefinedIntegral out;
    if (F.unit_rank_r == 0) {
        out.value = integrate(build_grid(F, 1), f);
        return out;
    }
    int P = std::max(1, start);
    auto prev = integrate(build_grid(F, P), f);
    for (;;) {
        if (2 * P > (1 << 14)) throw NumericError("integrate_refined: refinement cap reached");
        P *= 2;
        const auto cur = integrate(build_grid(F, P), f);
        const double change = std::abs(cur - prev);
        if (change <= tol * std::max(1.0, std::abs(cur))) {
            out.value = cur;
            out.change = change;
            out.points_per_dim = P;
            return out;
        }
        prev = cur;
    }
}

}  // namespace arakzeta
