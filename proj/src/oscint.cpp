#include "arakzeta/oscint.hpp"

#include <cmath>

#include "arakzeta/errors.hpp"
#include "arakzeta/kernels.hpp"
#include "arakzeta/quadrature.hpp"
#include "arakzeta/special.hpp"

namespace arakzeta {

double HyperplaneIntegralSpec::q_exp() const {
    double inv = 0.0;
    for (int v : nu) inv += 1.0 / v;
    return 1.0 / inv;
}

void check_spec(const HyperplaneIntegralSpec& spec) {
    if (spec.N() < 2) throw InputError("hyperplane spec needs N >= 2");
    if (spec.nu.size() != spec.c.size()) throw InputError("hyperplane spec: c and nu differ in length");
    for (std::size_t i = 0; i < spec.c.size(); ++i) {
        if (!(spec.c[i] > 0.0) || !std::isfinite(spec.c[i])) throw InputError("hyperplane spec: c_i must be positive");
        if (spec.nu[i] < 1) throw InputError("hyperplane spec: nu_i must be positive");
    }
}

cplx hyperplane_integral_closed(const HyperplaneIntegralSpec& spec, cplx s) {
    check_spec(spec);
    if (!(s.real() > 0.0)) throw DomainError("hyperplane_integral_closed needs Re s > 0");
    const double q = spec.q_exp();
    double log_nu = 0.0, log_c = 0.0;
    cplx lg = -log_gamma(s);
    for (int i = 0; i < spec.N(); ++i) {
        log_nu += std::log(static_cast<double>(spec.nu[i]));
        log_c += q / spec.nu[i] * std::log(spec.c[i]);
        lg += log_gamma(q * s / static_cast<double>(spec.nu[i]));
    }
    return q * std::exp(lg - log_nu - s * log_c);
}

double hyperplane_truncation_radius(const HyperplaneIntegralSpec& spec, double re_s, double tol) {
    check_spec(spec);
    const int N = spec.N();
    double cmin = spec.c[0];
    int numin = spec.nu[0];
    for (int i = 1; i < N; ++i) {
        cmin = std::min(cmin, spec.c[i]);
        numin = std::min(numin, spec.nu[i]);
    }
    // some x_i <= -|x|_inf/(N-1), so the base is >= cmin exp(numin |x|_inf/(N-1))
    const double rate = re_s * numin / (N - 1);
    auto tail = [&](double R) {
        const double shell = 2.0 * (N - 1) * std::pow(2.0 * R + 2.0, N - 2) / rate;
        return std::pow(cmin, -re_s) * std::exp(-rate * R) * shell;
    };
    double R = 1.0;
    while (tail(R) >= tol) R *= 1.25;
    return R;
}

NumericIntegral hyperplane_integral_numeric(const HyperplaneIntegralSpec& spec, cplx s, double tol, int drop) {
    check_spec(spec);
    const int N = spec.N();
    if (N > 4) throw CapabilityError("hyperplane_integral_numeric supports N <= 4");
    if (!(s.real() >= 1.0)) throw DomainError("hyperplane_integral_numeric needs Re s >= 1");
    if (drop < 0) drop = N - 1;
    if (drop >= N) throw InputError("drop index out of range");
    const int dim = N - 1;
    const double R = hyperplane_truncation_radius(spec, s.real(), tol * 1e-2);
    const double U = std::asinh(R);

    auto trapezoid = [&](double h) {
        const int m = static_cast<int>(std::ceil(U / h));
        std::vector<double> xs, ws;
        for (int k = -m; k <= m; ++k) {
            const double u = k * h;
            xs.push_back(std::sinh(u));
            ws.push_back(h * std::cosh(u));
        }
        const long long K = static_cast<long long>(xs.size());
        long long total = 1;
        for (int d = 0; d < dim; ++d) total *= K;
        // rows of the last chart coordinate, summed pairwise for a fixed order
        const long long rows = total / K;
        std::vector<cplx> row_sums(rows);
#pragma omp parallel for schedule(static)
        for (long long r = 0; r < rows; ++r) {
            std::vector<double> x(N);
            std::vector<cplx> terms(K);
            long long idx = r;
            double wr = 1.0, sum_fixed = 0.0;
            std::vector<int> free_coords;
            for (int i = 0; i < N; ++i)
                if (i != drop) free_coords.push_back(i);
            for (int d = 0; d + 1 < dim; ++d) {
                const long long k = idx % K;
                idx /= K;
                x[free_coords[d]] = xs[k];
                wr *= ws[k];
                sum_fixed += xs[k];
            }
            const int last = free_coords[dim - 1];
            for (long long k = 0; k < K; ++k) {
                x[last] = xs[k];
                x[drop] = -(sum_fixed + xs[k]);
                double base = 0.0;
                for (int i = 0; i < N; ++i) base += spec.c[i] * std::exp(-spec.nu[i] * x[i]);
                terms[k] = wr * ws[k] * std::exp(-s * std::log(base));
            }
            row_sums[r] = pairwise_sum(std::span<const cplx>(terms));
        }
        return pairwise_sum(std::span<const cplx>(row_sums));
    };

    NumericIntegral out;
    out.radius = R;
    double h = 0.25;
    cplx prev = trapezoid(h);
    for (int it = 0; it < 8; ++it) {
        h /= 2.0;
        const cplx cur = trapezoid(h);
        out.value = cur;
        out.change = std::abs(cur - prev);
        if (out.change <= tol * std::max(1e-300, std::abs(cur))) return out;
        prev = cur;
    }
    throw NumericError("hyperplane_integral_numeric: step halving did not converge");
}

HyperplaneIntegralSpec field_hyperplane_spec(const NumberFieldData& F) {
    HyperplaneIntegralSpec spec;
    for (int v = 0; v < F.places(); ++v) {
        const bool real = v < F.r1;
        spec.c.push_back(real ? 1.0 : 2.0);
        spec.nu.push_back(real ? 2 : 1);
    }
    return spec;
}

bool extreme_coordinate_bound_holds(const std::vector<double>& x) {
    if (x.size() < 2) throw InputError("extreme_coordinate_bound_holds needs N >= 2");
    double mx = x[0], mn = x[0], sup = 0.0;
    for (double v : x) {
        mx = std::max(mx, v);
        mn = std::min(mn, v);
        sup = std::max(sup, std::abs(v));
    }
    const double bound = sup / static_cast<double>(x.size() - 1);
    return mx >= bound && mn <= -bound;
}

double alpha_k(const NumberFieldData& F) {
    const double n = F.degree_n;
    return std::pow(kPi * n, F.unit_rank_r / 2.0) * std::pow(2.0, -F.r1 / 2.0) * std::sqrt(2.0 / n);
}

cplx torus_integral_closed(const NumberFieldData& F, cplx s) {
    if (F.unit_rank_r == 0) throw DomainError("torus_integral_closed needs unit rank >= 1");
    if (!(s.real() > 0.0)) throw DomainError("torus_integral_closed needs Re s > 0");
    const double n = F.degree_n;
    cplx lg = -log_gamma(s) + static_cast<double>(F.r1) * log_gamma(s / n) +
              static_cast<double>(F.r2) * log_gamma(2.0 * s / n);
    lg += -std::log(n) + (1.0 - F.r1) * std::log(2.0) - 2.0 * s * static_cast<double>(F.r2) / n * std::log(2.0);
    return std::exp(lg);
}

namespace {

// sum_p w_p nu_p exp(logfac - u log(scale a_p)), pairwise over grid order.
cplx weighted_power_sum(const ClassSpaceGrid& grid, const std::vector<LatticeInvariants>& inv, cplx u, double scale,
                        cplx logfac, double radius = -1.0) {
    if (inv.size() != grid.points.size()) throw InputError("invariants do not match the grid");
    std::vector<cplx> terms(inv.size());
    for (std::size_t i = 0; i < inv.size(); ++i) {
        if (radius >= 0.0) {
            const auto& p = grid.points[i];
            bool inside = p.class_index == 0;
            for (double t : p.theta) inside = inside && std::min(t, 1.0 - t) <= radius;
            if (!inside) continue;
        }
        terms[i] = grid.weights[i] * inv[i].nu * std::exp(logfac - u * std::log(scale * inv[i].a));
    }
    return pairwise_sum(std::span<const cplx>(terms));
}

}  // namespace

cplx C_integral(const ClassSpaceGrid& grid, const std::vector<LatticeInvariants>& inv, cplx s) {
    return weighted_power_sum(grid, inv, s, 1.0, 0.0);
}

cplx C_integral(const NumberFieldData& F, const ClassSpaceGrid& grid, cplx s) {
    return C_integral(grid, invariants_on_grid(F, grid), s);
}

cplx C_integral_local(const ClassSpaceGrid& grid, const std::vector<LatticeInvariants>& inv, cplx s, double radius) {
    return weighted_power_sum(grid, inv, s, 1.0, 0.0, radius);
}

cplx asymptotic_ratio(const NumberFieldData& F, cplx C, cplx s) {
    const double n = F.degree_n;
    return C * std::exp(F.unit_rank_r / 2.0 * std::log(s) + s * std::log(n)) / (F.mu_count * alpha_k(F));
}

cplx A_factor(const NumberFieldData& F, const ClassSpaceGrid& grid, const std::vector<LatticeInvariants>& inv,
              cplx s) {
    const double n = F.degree_n;
    const cplx u = n * s / 2.0;
    const double ur = std::round(u.real());
    if (std::abs(u.imag()) < 1e-12 && ur <= 0.0 && std::abs(u.real() - ur) < 1e-12)
        throw PoleError("A_factor: Gamma(ns/2) has a pole", s);
    return n / 2.0 * weighted_power_sum(grid, inv, u, kPi, log_gamma(u));
}

cplx A_factor(const NumberFieldData& F, const ClassSpaceGrid& grid, cplx s) {
    return A_factor(F, grid, invariants_on_grid(F, grid), s);
}

cplx C_tilde(const NumberFieldData& F, const ClassSpaceGrid& grid, const std::vector<LatticeInvariants>& inv, cplx s) {
    const double n = F.degree_n;
    const double pre = std::sqrt(std::pow(2.0, F.r1) * n / 2.0) / F.mu_count;
    return pre * weighted_power_sum(grid, inv, n * s / 2.0, 1.0 / n, 0.0);
}

cplx C_tilde(const NumberFieldData& F, const ClassSpaceGrid& grid, cplx s) {
    return C_tilde(F, grid, invariants_on_grid(F, grid), s);
}

}  // namespace arakzeta
