#include "arakzeta/special.hpp"

#include <array>
#include <cmath>

#include "arakzeta/errors.hpp"

namespace arakzeta {

namespace {

constexpr std::array<double, 16> kB2k = {
    1.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

bool near_nonpositive_integer(cplx z) {
    if (z.real() > 0.5) return false;
    const double r = std::round(z.real());
    return std::abs(z - cplx(r, 0.0)) < 1e-14 * std::max(1.0, std::abs(r));
}

// log sin(pi z), stable for large |Im z|.
cplx log_sin_pi(cplx z) {
    const cplx i(0.0, 1.0);
    if (std::abs(z.imag()) < 30.0) return std::log(std::sin(kPi * z));
    // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / 2i; keep the dominant exponential.
    if (z.imag() > 0.0)
        return -i * kPi * z + std::log(1.0 - std::exp(2.0 * i * kPi * z)) - std::log(-2.0 * i);
    return i * kPi * z + std::log(1.0 - std::exp(-2.0 * i * kPi * z)) - std::log(2.0 * i);
}

cplx stirling(cplx z) {
    cplx sum = (z - 0.5) * std::log(z) - z + kHalfLog2Pi;
    const cplx inv = 1.0 / z;
    const cplx inv2 = inv * inv;
    cplx p = inv;
    for (int k = 1; k <= 10; ++k) {
        sum += kB2k[k] / (2.0 * k * (2.0 * k - 1.0)) * p;
        p *= inv2;
    }
    return sum;
}

}  // namespace

double bernoulli_even(int k) {
    if (k < 0 || k >= static_cast<int>(kB2k.size())) throw DomainError("bernoulli_even: index out of table");
    return kB2k[k];
}

cplx log_gamma(cplx z) {
    if (near_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer", z);
    if (z.real() < 0.5) return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
    cplx shift(0.0, 0.0);
    while (z.real() < 15.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return stirling(z) - shift;
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

cplx expm1(cplx z) {
    const double x = z.real();
    const double y = z.imag();
    const double s = std::sin(0.5 * y);
    const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
    const double im = std::exp(x) * std::sin(y);
    return {re, im};
}

cplx gamma_R(cplx s) {
    return std::exp(-0.5 * std::log(2.0) - 0.5 * s * std::log(kPi) + log_gamma(0.5 * s));
}

cplx gamma_C(cplx s) { return std::exp(-s * std::log(2.0 * kPi) + log_gamma(s)); }

HurwitzValue hurwitz_zeta_and_du(cplx u, cplx z) {
    if (!(z.real() > 0.0)) throw DomainError("hurwitz_zeta_and_du: requires Re z > 0");
    if (std::abs(u - 1.0) < 1e-12) throw PoleError("hurwitz_zeta_and_du: pole at u = 1", {1.0, 0.0}, {1.0, 0.0});

    // Move the Euler-Maclaurin point far enough right that 12 terms suffice.
    const double target = 20.0 + 2.0 * std::abs(u);
    const int N = std::max(0, static_cast<int>(std::ceil(target - z.real())));

    HurwitzValue out{{0.0, 0.0}, {0.0, 0.0}};
    for (int k = 0; k < N; ++k) {
        const cplx lz = std::log(z + static_cast<double>(k));
        const cplx t = std::exp(-u * lz);
        out.value += t;
        out.du -= lz * t;
    }

    const cplx a = z + static_cast<double>(N);
    const cplx la = std::log(a);
    const cplx a_mu = std::exp(-u * la);  // a^{-u}

    const cplx t1 = a * a_mu / (u - 1.0);
    out.value += t1;
    out.du += -la * t1 - a * a_mu / ((u - 1.0) * (u - 1.0));

    out.value += 0.5 * a_mu;
    out.du += -la * 0.5 * a_mu;

    // Pochhammer P = u(u+1)...(u+2j-2) and its u-derivative, built by the product rule.
    cplx P = u;
    cplx dP = 1.0;
    cplx pow_a = a_mu / a;  // a^{-u-1}
    const cplx inv_a2 = 1.0 / (a * a);
    double fact = 2.0;  // (2j)!
    for (int j = 1; j <= 12; ++j) {
        const double c = kB2k[j] / fact;
        out.value += c * P * pow_a;
        out.du += c * (dP - la * P) * pow_a;
        // advance to j+1: multiply by (u+2j-1)(u+2j)
        for (int m = 2 * j - 1; m <= 2 * j; ++m) {
            dP = dP * (u + static_cast<double>(m)) + P;
            P = P * (u + static_cast<double>(m));
        }
        pow_a *= inv_a2;
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return out;
}

cplx riemann_zeta(cplx s) { return hurwitz_zeta_and_du(s, {1.0, 0.0}).value; }

}  // namespace arakzeta
