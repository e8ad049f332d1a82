#include <cmath>
#include <cstdlib>

#include "arakzeta/errors.hpp"
#include "arakzeta/special.hpp"
#include "arakzeta/zeta_nf.hpp"

namespace arakzeta {

namespace {

int jacobi(long long a, long long n) {
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const long long r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

}  // namespace

int kronecker_symbol(long long D, long long n) {
    if (n < 0) throw DomainError("kronecker_symbol needs n >= 0");
    if (n == 0) return std::llabs(D) == 1 ? 1 : 0;
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (D % 2 == 0) return 0;
        const long long r = ((D % 8) + 8) % 8;
        if (r == 3 || r == 5) result = -result;
    }
    if (n == 1) return result;
    return result * jacobi(D, n);
}

cplx dedekind_zeta(const NumberFieldData& F, cplx s) {
    if (!(s.real() >= 1.5)) throw DomainError("Dedekind zeta oracle needs Re s >= 1.5");
    if (F.degree_n == 1) return riemann_zeta(s);
    if (F.degree_n != 2) throw CapabilityError("Dedekind zeta oracle supports Q and quadratic fields only");
    const long long D = F.discriminant;
    if (D == 0) throw CapabilityError("Dedekind zeta oracle needs the signed discriminant of the field");
    const long long m = std::llabs(D);
    cplx L = 0.0;
    for (long long a = 1; a < m; ++a) {
        const int chi = kronecker_symbol(D, a);
        if (chi == 0) continue;
        L += static_cast<double>(chi) * hurwitz_zeta_and_du(s, static_cast<double>(a) / m).value;
    }
    L *= std::exp(-s * std::log(static_cast<double>(m)));
    return riemann_zeta(s) * L;
}

cplx dedekind_zeta_completed(const NumberFieldData& F, cplx s) {
    cplx z = dedekind_zeta(F, s);
    for (int i = 0; i < F.r1; ++i) z *= gamma_R(s);
    for (int i = 0; i < F.r2; ++i) z *= gamma_C(s);
    return z;
}

}  // namespace arakzeta
