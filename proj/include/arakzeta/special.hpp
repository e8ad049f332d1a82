#pragma once

#include <complex>

namespace arakzeta {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// log Gamma on the whole plane minus the poles. Stirling series after an
// upward shift for Re z >= 0.5, reflection below. The imaginary part is some
// branch of arg Gamma(z); callers exponentiate.
cplx log_gamma(cplx z);
cplx gamma(cplx z);

// exp(z) - 1 without cancellation for small |z|.
cplx expm1(cplx z);

// Gamma factors with the 2^{-1/2} normalization of Gamma_R.
cplx gamma_R(cplx s);
cplx gamma_C(cplx s);

struct HurwitzValue {
    cplx value;  // zeta_H(u, z)
    cplx du;     // d/du zeta_H(u, z)
};

// zeta_H(u, z) = sum_{nu >= 0} (z + nu)^{-u} for Re z > 0, continued in u by
// Euler-Maclaurin with 12 Bernoulli terms. Throws PoleError at u = 1.
HurwitzValue hurwitz_zeta_and_du(cplx u, cplx z);

// Riemann zeta through zeta_H(s, 1).
cplx riemann_zeta(cplx s);

// Bernoulli number B_{2k}, 1 <= k <= 15.
double bernoulli_even(int k);

}  // namespace arakzeta
