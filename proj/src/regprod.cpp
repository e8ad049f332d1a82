#include "arakzeta/regprod.hpp"

#include <cmath>

#include "arakzeta/errors.hpp"
#include "arakzeta/special.hpp"

namespace arakzeta {

namespace {

bool tail_ready(const RegTail& t) {
    const cplx w = t.z / t.c + static_cast<double>(t.nu0);
    if (!(w.real() > 0.0)) return false;
    // arg(w + nu') moves monotonically from arg w to 0, so checking nu' = 0 suffices
    const double total = std::arg(t.c) + std::arg(w);
    return total > -kPi && total <= kPi;
}

}  // namespace

RegularizedSequence normalize_tails(const RegularizedSequence& seq) {
    RegularizedSequence out;
    out.terms = seq.terms;
    for (auto t : seq.tails) {
        if (t.c == cplx(0.0)) throw DomainError("regularized tail with zero step");
        int moved = 0;
        while (!tail_ready(t)) {
            if (++moved > 1000000) throw DomainError("regularized tail never enters a half-plane");
            out.terms.push_back({t.z + t.c * static_cast<double>(t.nu0), t.m});
            ++t.nu0;
        }
        out.tails.push_back(t);
    }
    for (const auto& term : out.terms)
        if (term.a == cplx(0.0)) throw DomainError("regularized sequence contains a zero term");
    return out;
}

RegProduct reg_product(const RegularizedSequence& seq, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("reg_product needs alpha > 0");
    const auto norm = normalize_tails(seq);
    const double la = std::log(alpha);
    cplx dprime = 0.0, d0 = 0.0;
    for (const auto& t : norm.terms) {
        dprime -= static_cast<double>(t.m) * (la + std::log(t.a));
        d0 += static_cast<double>(t.m);
    }
    for (const auto& t : norm.tails) {
        const cplx w = t.z / t.c + static_cast<double>(t.nu0);
        const auto h = hurwitz_zeta_and_du(0.0, w);
        const cplx lc = la + std::log(t.c);
        dprime += static_cast<double>(t.m) * (-lc * h.value + h.du);
        d0 += static_cast<double>(t.m) * h.value;
    }
    return {std::exp(-dprime), -dprime, d0};
}

cplx lerch_closed(double alpha, cplx z) {
    return std::exp((0.5 - z) * std::log(alpha) + 0.5 * std::log(2.0 * kPi) - log_gamma(z));
}

cplx gamma_R_reg_check(cplx s) {
    RegularizedSequence seq;
    seq.tails.push_back({s, 2.0, 0, 1});
    return reg_product(seq, 1.0 / (2.0 * kPi)).value * gamma_R(s) - 1.0;
}

cplx gamma_C_reg_check(cplx s) {
    RegularizedSequence seq;
    seq.tails.push_back({s, 1.0, 0, 1});
    return reg_product(seq, 1.0 / (2.0 * kPi)).value * gamma_C(s) - 1.0;
}

RegProduct lattice_family_product(double q, cplx rho0, cplx s, double alpha, int m) {
    if (!(q > 1.0)) throw DomainError("lattice product needs q > 1");
    const cplx c(0.0, 2.0 * kPi / std::log(q));
    const cplx z = s - rho0;
    RegularizedSequence seq;
    seq.tails.push_back({z, -c, 0, m});  // nu >= 0
    seq.tails.push_back({z, c, 1, m});   // nu < 0
    return reg_product(seq, alpha);
}

cplx ff_regularization_check(double q, cplx w, cplx s, double alpha) {
    const cplx cand =
        std::exp(lattice_family_product(q, 0.0, s, alpha, -1).log_value + lattice_family_product(q, w, s, alpha, -1).log_value);
    const double L = std::log(q);
    const cplx direct = 1.0 / ((1.0 - std::exp(-s * L)) * (1.0 - std::exp((w - s) * L)));
    return cand - direct;
}

std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs) {
    std::size_t deg = coeffs.size();
    while (deg > 0 && coeffs[deg - 1] == cplx(0.0)) --deg;
    if (deg == 0) throw DomainError("polynomial_roots: zero polynomial");
    const int n = static_cast<int>(deg) - 1;
    if (n == 0) return {};
    std::vector<cplx> a(coeffs.begin(), coeffs.begin() + deg);
    for (auto& x : a) x /= coeffs[deg - 1];
    auto eval = [&](cplx x) {
        cplx v = a[n];
        for (int i = n - 1; i >= 0; --i) v = v * x + a[i];
        return v;
    };
    auto deriv = [&](cplx x) {
        cplx v = static_cast<double>(n) * a[n];
        for (int i = n - 1; i >= 1; --i) v = v * x + static_cast<double>(i) * a[i];
        return v;
    };
    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[i]));
    radius = 1.0 + radius;
    std::vector<cplx> z(n);
    for (int k = 0; k < n; ++k) z[k] = std::polar(0.5 * radius, 2.0 * kPi * k / n + 0.4);
    for (int it = 0; it < 2000; ++it) {
        double move = 0.0;
        for (int k = 0; k < n; ++k) {
            cplx den = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != k) den *= z[k] - z[j];
            const cplx dz = eval(z[k]) / den;
            z[k] -= dz;
            move = std::max(move, std::abs(dz) / std::max(1.0, std::abs(z[k])));
        }
        if (move < 1e-15) break;
    }
    for (auto& r : z)
        for (int it = 0; it < 3; ++it) {
            const cplx d = deriv(r);
            if (d == cplx(0.0)) break;
            r -= eval(r) / d;
        }
    return z;
}

cplx curve_regularization_check(double q, cplx w, cplx s, const std::vector<cplx>& p_coeffs, double alpha) {
    if (p_coeffs.empty() || std::abs(p_coeffs[0] - 1.0) > 1e-12) throw DomainError("P must satisfy P(0) = 1");
    const double L = std::log(q);
    cplx log_cand = lattice_family_product(q, 0.0, s, alpha, -1).log_value +
                    lattice_family_product(q, w, s, alpha, -1).log_value;
    // P(T) = prod (1 - beta_j T) with beta_j = 1 / T_j; each factor is 1 - e^{-L (s - rho_j)}, q^{rho_j} = beta_j
    for (const cplx& root : polynomial_roots(p_coeffs)) {
        const cplx rho = std::log(1.0 / root) / L;
        log_cand += lattice_family_product(q, rho, s, alpha, 1).log_value;
    }
    const cplx T = std::exp(-s * L);
    cplx P = 0.0;
    for (std::size_t i = p_coeffs.size(); i-- > 0;) P = P * T + p_coeffs[i];
    const cplx direct = P / ((1.0 - T) * (1.0 - std::exp((w - s) * L)));
    return std::exp(log_cand) - direct;
}

}  // namespace arakzeta
