#include "arakzeta/zeta_nf.hpp"

#include <cmath>
#include <limits>

#include "arakzeta/errors.hpp"
#include "arakzeta/oscint.hpp"
#include "arakzeta/quadrature.hpp"
#include "arakzeta/special.hpp"

namespace arakzeta {

namespace {

constexpr double kPoleGuard = 1e-8;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxPanels = 4096;

// w^{-1}((1+x)^w - 1) - x without cancellation.
cplx power_excess(double x, cplx w, double w_small) {
    if (x > 0.1) return power_minus_one_over_w(x, w, w_small) - x;
    cplx c = (w - 1.0) / 2.0;
    cplx sum = 0.0;
    double xk = x * x;
    for (int k = 2; k < 80; ++k) {
        const cplx term = c * xk;
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum) || xk == 0.0) break;
        c *= (w - static_cast<double>(k)) / static_cast<double>(k + 1);
        xk *= x;
    }
    return sum;
}

// w^{-1}(e^{w y} - 1) with its limit y at w = 0.
cplx expm1_over(cplx w, double y) {
    if (std::abs(w) < 1e-300) return y;
    return expm1(w * y) / w;
}

// int_Y^inf w^{-1}(e^{w y} - 1) e^{-s y} dy for Re s > max(Re w, 0).
cplx power_tail(cplx s, cplx w, double Y) {
    return std::exp(-s * Y) * (expm1_over(w, Y) / (s - w) + 1.0 / (s * (s - w)));
}

void pole_guard(cplx s, cplx w, cplx res0, cplx resw) {
    if (std::abs(s) < kPoleGuard) throw PoleError("evaluation within 1e-8 of the pole s = 0", 0.0, res0);
    if (std::abs(s - w) < kPoleGuard) throw PoleError("evaluation within 1e-8 of the pole s = w", w, resw);
}

struct PanelIntegral {
    std::vector<cplx> value;
    double change = 0.0;
    double roundoff = 0.0;
};

// int_lo^hi e^{u x} G(x) dx for each u, G(x) = sum_p w_p fn(p, x); panels
// doubled until every value moves less than tol relative to max(1, |value|).
template <class Fn>
PanelIntegral panel_integral(const ThetaProfiles& prof, double lo, double hi, const std::vector<cplx>& us,
                             Fn&& fn, double tol, Exec exec) {
    PanelIntegral out;
    std::vector<cplx> prev;
    for (int panels = 4; panels <= kMaxPanels; panels *= 2) {
        const auto nodes = gauss_legendre_panels(lo, hi, panels);
        const auto G = node_sums(
            prof, nodes.size(), [&](const PointProfile& p, long long j) { return fn(p, nodes[j].x); }, exec);
        std::vector<cplx> cur(us.size());
        double round = 0.0;
        std::vector<cplx> terms(nodes.size());
        for (std::size_t i = 0; i < us.size(); ++i) {
            double abs_sum = 0.0;
            for (std::size_t j = 0; j < nodes.size(); ++j) {
                terms[j] = nodes[j].w * std::exp(us[i] * nodes[j].x) * G[j];
                abs_sum += std::abs(terms[j]);
            }
            cur[i] = pairwise_sum(std::span<const cplx>(terms));
            round = std::max(round, 64.0 * kEps * abs_sum);
        }
        if (!prev.empty()) {
            double change = 0.0;
            bool ok = true;
            for (std::size_t i = 0; i < us.size(); ++i) {
                const double d = std::abs(cur[i] - prev[i]);
                change = std::max(change, d);
                if (d > tol * std::max(1.0, std::abs(cur[i]))) ok = false;
            }
            if (ok) {
                out.value = cur;
                out.change = change;
                out.roundoff = round;
                return out;
            }
        }
        prev = std::move(cur);
    }
    throw NumericError("t-quadrature did not converge within the panel cap");
}

}  // namespace

cplx power_minus_one_over_w(double x, cplx w, double w_small) {
    const double L = std::log1p(x);
    if (std::abs(w) >= w_small) return expm1(w * L) / w;
    return L + 0.5 * w * L * L;
}

void check_params(const ZetaEvalParams& p) {
    if (p.grid_points < 1) throw InputError("grid_points must be >= 1");
    if (!(p.t_tol > 0.0 && p.t_tol <= 1e-3)) throw InputError("t_tol must lie in (0, 1e-3]");
    if (!(p.theta_tol > 0.0 && p.theta_tol <= 1e-3)) throw InputError("theta_tol must lie in (0, 1e-3]");
    if (!(p.w_small > 0.0 && p.w_small <= 1e-3)) throw InputError("w_small must lie in (0, 1e-3]");
}

NfZetaEvaluator::NfZetaEvaluator(const NumberFieldData& F, const ZetaEvalParams& params) : F_(F), p_(params) {
    check_params(p_);
    validate(F_);
    hR_ = F_.class_number_h * F_.regulator;
    const double n = F_.degree_n, d = F_.disc_abs;
    double dual_scale = 0.0;
    try {
        for (int c = 0; c < F_.class_number_h; ++c) kappa_minus(F_, {c, std::vector<double>(F_.places(), 0.0)});
        dual_scale = std::pow(d, 1.0 / n);
    } catch (const CapabilityError&) {
        dual_scale = 0.0;
    }
    grid_fine_ = build_grid(F_, p_.grid_points);
    fine_ = build_profiles(F_, grid_fine_, p_.theta_tol, std::pow(d, -1.0 / n), dual_scale, p_.exec);
    if (F_.unit_rank_r > 0 && p_.grid_points > 1) {
        grid_coarse_ = build_grid(F_, p_.grid_points / 2);
        coarse_ = build_profiles(F_, grid_coarse_, p_.theta_tol, std::pow(d, -1.0 / n), dual_scale, p_.exec);
    }
    nu_max_ = 2;
    for (const auto& pt : fine_.points) nu_max_ = std::max(nu_max_, pt.inv.nu);
}

double NfZetaEvaluator::vmax_for(double sigma, cplx w) const {
    const double n = F_.degree_n;
    const double c = kPi * n * std::pow(F_.disc_abs, -1.0 / n);
    const double R = std::max(1.0, std::abs(w));
    const double logC = std::log(hR_ * (nu_max_ + 1.0) * (1.0 + std::exp(2.0 * R)));
    auto phi = [&](double v) { return logC + sigma * v - c * std::exp(2.0 * v / n); };
    double peak = phi(0.0);
    double v = 0.0;
    for (;; v += 0.01) {
        const double f = phi(v);
        peak = std::max(peak, f);
        if (f < peak && f < std::max(peak, 0.0) + std::log(p_.t_tol) - 8.0) break;
        if (v > 200.0) throw NumericError("t-range truncation failed");
    }
    return std::max(v, 0.5);
}

NfZetaEvaluator::KPair NfZetaEvaluator::K(const std::vector<cplx>& us, cplx w) {
    double sigma = 0.0;
    for (const auto& u : us) sigma = std::max(sigma, u.real());
    const double vmax = vmax_for(sigma, w);
    const double n = F_.degree_n;
    const double lam0 = std::pow(F_.disc_abs, -1.0 / n);
    const double ws = p_.w_small;
    auto fn = [&](const ThetaProfiles& prof) {
        return [&, band = prof.band](const PointProfile& p, double v) {
            const double lam = lam0 * std::exp(2.0 * v / n);
            return power_minus_one_over_w(theta_sample(p.primal, lam, p.inv.a, band).minus_one, w, ws);
        };
    };
    const auto fine = panel_integral(fine_, 0.0, vmax, us, fn(fine_), p_.t_tol, p_.exec);
    KPair out;
    out.value = fine.value;
    // truncated theta tails: at scale lam the omitted mass is below theta_tol^{lam/lam0}
    const auto nodes = gauss_legendre_panels(0.0, vmax, 16);
    const double dfac = hR_ * (1.0 + std::exp(2.0 * std::max(1.0, std::abs(w))));
    for (std::size_t i = 0; i < us.size(); ++i) {
        double tail = 0.0;
        for (const auto& q : nodes)
            tail += q.w * std::exp(us[i].real() * q.x) * std::pow(p_.theta_tol, std::exp(2.0 * q.x / n));
        out.err.push_back(fine.change + fine.roundoff + dfac * tail);
    }
    if (!coarse_.points.empty()) {
        const auto coarse = panel_integral(coarse_, 0.0, vmax, us, fn(coarse_), p_.t_tol, p_.exec);
        for (std::size_t i = 0; i < us.size(); ++i) out.err[i] += std::abs(fine.value[i] - coarse.value[i]);
    }
    return out;
}

TwoVarZetaValue NfZetaEvaluator::J(cplx s, cplx w) {
    const auto k = K({s}, w);
    const cplx f = std::exp(-s / 2.0 * std::log(F_.disc_abs));
    return {f * k.value[0], std::abs(f) * k.err[0], s, w};
}

TwoVarZetaValue NfZetaEvaluator::zeta_Xk(cplx s, cplx w) {
    pole_guard(s, w, -hR_, hR_);
    const auto k = K({s, w - s}, w);
    const cplx bracket = k.value[0] + k.value[1] - hR_ / (s * (w - s));
    const double err = k.err[0] + k.err[1] + 4.0 * kEps * std::abs(hR_ / (s * (w - s)));
    return {w * bracket, std::abs(w) * err, s, w};
}

TwoVarZetaValue NfZetaEvaluator::zeta_normalized(cplx s, cplx w) {
    const double c0 = std::pow(2.0, F_.r1 / 2.0) / F_.mu_count;
    const double ld = std::log(F_.disc_abs);
    cplx r0 = 0.0, rw = 0.0;
    if (std::abs(w) >= kPoleGuard) {
        r0 = -c0 * hR_ / w;
        rw = c0 * std::exp(-w / 2.0 * ld) * hR_ / w;
    }
    pole_guard(s, w, r0, rw);
    const auto k = K({s, w - s}, w);
    const cplx bracket = k.value[0] + k.value[1] - hR_ / (s * (w - s));
    const cplx f = c0 * std::exp(-s / 2.0 * ld);
    const double err = k.err[0] + k.err[1] + 4.0 * kEps * std::abs(hR_ / (s * (w - s)));
    return {f * bracket, std::abs(f) * err + 4.0 * kEps * std::abs(f * bracket), s, w};
}

TwoVarZetaValue NfZetaEvaluator::L_H1(cplx s, cplx w) {
    const double c0 = std::pow(2.0, F_.r1 / 2.0) / F_.mu_count;
    const auto k = K({s, w - s}, w);
    const cplx sw = s * (s - w);
    const cplx inner = sw * (k.value[0] + k.value[1]) + hR_;
    const cplx f = c0 * std::exp(-s / 2.0 * std::log(F_.disc_abs)) / (4.0 * kPi * kPi);
    const double err = std::abs(f) * (std::abs(sw) * (k.err[0] + k.err[1]) + 4.0 * kEps * std::abs(inner));
    return {f * inner, err + 4.0 * kEps * std::abs(f * inner), s, w};
}

void NfZetaEvaluator::ensure_long(double V) {
    if (V <= long_V_) return;
    const double n = F_.degree_n;
    const double scale = std::pow(F_.disc_abs, -1.0 / n) * std::exp(-2.0 * V / n);
    long_ = build_profiles(F_, grid_fine_, p_.theta_tol, scale, 0.0, p_.exec);
    long_V_ = V;
}

TwoVarZetaValue NfZetaEvaluator::zeta_Xk_split(cplx s, cplx w) {
    if (!(s.real() > w.real() && s.real() > 0.0)) throw DomainError("split representation needs Re s > max(Re w, 0)");
    const double sigma = std::max({std::abs(s.real()), std::abs((w - s).real()), std::abs(w.real())}) + 1.0;
    const double V = vmax_for(sigma, w);
    ensure_long(V);
    const double n = F_.degree_n;
    const double lam0 = std::pow(F_.disc_abs, -1.0 / n);
    const double ws = p_.w_small;
    auto fn = [&](const PointProfile& p, double y) {
        const double lam = lam0 * std::exp(-2.0 * y / n);
        return power_minus_one_over_w(theta_sample(p.primal, lam, p.inv.a, long_.band).minus_one, w, ws);
    };
    const auto mid = panel_integral(long_, -V, V, {-s}, fn, p_.t_tol, p_.exec);
    const cplx tail = hR_ * power_tail(s, w, V);
    const cplx inner = mid.value[0] + tail;
    const double err = mid.change + mid.roundoff + 4.0 * kEps * std::abs(tail);
    return {w * inner, std::abs(w) * err, s, w};
}

TwoVarZetaValue NfZetaEvaluator::zeta_Xk_direct(cplx s, cplx w) {
    if (!(w.real() < s.real() && s.real() < 0.0)) throw DomainError("direct representation needs Re w < Re s < 0");
    const double sigma = std::max({std::abs(s.real()), std::abs((w - s).real()), std::abs(w.real())}) + 1.0;
    const double V = vmax_for(sigma, w);
    ensure_long(V);
    const double n = F_.degree_n;
    const double lam0 = std::pow(F_.disc_abs, -1.0 / n);
    auto fn = [&](const PointProfile& p, double y) {
        const double lam = lam0 * std::exp(-2.0 * y / n);
        return std::exp(w * std::log1p(theta_sample(p.primal, lam, p.inv.a, long_.band).minus_one));
    };
    const auto mid = panel_integral(long_, -V, V, {-s}, fn, p_.t_tol, p_.exec);
    const cplx small = hR_ * std::exp(s * V) / (-s);
    const cplx large = hR_ * std::exp((w - s) * V) / (s - w);
    const cplx value = mid.value[0] + small + large;
    return {value, mid.change + mid.roundoff + 4.0 * kEps * (std::abs(small) + std::abs(large)), s, w};
}

cplx NfZetaEvaluator::A(cplx s) const {
    std::vector<LatticeInvariants> inv;
    for (const auto& p : fine_.points) inv.push_back(p.inv);
    return A_factor(F_, grid_fine_, inv, s);
}

FwRatio NfZetaEvaluator::f_w_ratio(cplx s, cplx w) {
    if (!(s.real() > w.real() && s.real() > 0.0)) throw DomainError("f_w_ratio needs Re s > max(Re w, 0)");
    if (!has_dual()) throw CapabilityError("f_w_ratio needs k1 data for every class (kappa table)");
    const double n = F_.degree_n, d = F_.disc_abs;
    const double lam0 = std::pow(d, -1.0 / n), mu0 = std::pow(d, 1.0 / n);
    const double ws = p_.w_small;
    const double vmax = vmax_for(s.real(), w);
    const double Y = std::max(0.5, n / 2.0 * std::log(45.0 / (kPi * n * lam0)));

    struct Part {
        cplx total;
        cplx A;
        double err;
    };
    auto evaluate = [&](const ThetaProfiles& prof, const ClassSpaceGrid& grid) {
        const double band = prof.band;
        // t <= sqrt d: g = (k0 - 1 - lead) + [w^{-1}(k0^w - 1) - (k0 - 1)]
        auto g_low = [&](const PointProfile& p, double v) {
            const auto ts = theta_sample(p.primal, lam0 * std::exp(2.0 * v / n), p.inv.a, band);
            return ts.rest + power_excess(ts.minus_one, w, ws);
        };
        // t >= sqrt d: k0 = e^y (1 + x*), x* from the lattice of [kappa] - D
        auto g_high = [&](const PointProfile& p, double y) {
            const double xs = theta_sample(p.dual, mu0 * std::exp(2.0 * y / n), 0.0, band).minus_one;
            const double X = std::expm1(y) + std::exp(y) * xs;
            return power_minus_one_over_w(X, w, ws) - p.inv.nu * std::exp(-kPi * lam0 * std::exp(-2.0 * y / n) * p.inv.a);
        };
        const auto lo = panel_integral(prof, 0.0, vmax, {s}, g_low, p_.t_tol, p_.exec);
        const auto hi = panel_integral(prof, 0.0, Y, {-s}, g_high, p_.t_tol, p_.exec);
        // y >= Y: x* is negligible; the lead term integrates as a series in e^{-2y/n}
        cplx lead_tail = 0.0;
        std::vector<cplx> lt(prof.points.size());
        for (std::size_t i = 0; i < prof.points.size(); ++i) {
            const auto& p = prof.points[i];
            const double c = kPi * lam0 * p.inv.a;
            cplx sum = 0.0;
            double coef = 1.0;
            for (int k = 0; k < 200; ++k) {
                const cplx e = s + 2.0 * k / n;
                const cplx term = coef * std::exp(-e * Y) / e;
                sum += term;
                if (k > 2 && std::abs(term) < 1e-18 * std::abs(sum)) break;
                coef *= -c / (k + 1);
            }
            lt[i] = p.weight * static_cast<double>(p.inv.nu) * sum;
        }
        lead_tail = pairwise_sum(std::span<const cplx>(lt));
        const cplx tail = hR_ * power_tail(s, w, Y) - lead_tail;
        std::vector<LatticeInvariants> inv;
        for (const auto& p : prof.points) inv.push_back(p.inv);
        const cplx dfac = std::exp(-s / 2.0 * std::log(d));
        Part out;
        out.total = dfac * (lo.value[0] + hi.value[0] + tail);
        out.A = A_factor(F_, grid, inv, s);
        out.err = std::abs(dfac) * (lo.change + lo.roundoff + hi.change + hi.roundoff + 8.0 * kEps * std::abs(tail));
        return out;
    };
    const Part fine = evaluate(fine_, grid_fine_);
    FwRatio out;
    out.minus_one = fine.total / fine.A;
    out.value = 1.0 + out.minus_one;
    out.est_error = fine.err / std::abs(fine.A) + 4.0 * kEps * std::abs(out.minus_one);
    if (!coarse_.points.empty()) {
        const Part coarse = evaluate(coarse_, grid_coarse_);
        out.est_error += std::abs(out.minus_one - coarse.total / coarse.A);
    }
    return out;
}

}  // namespace arakzeta
