#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "arakzeta/errors.hpp"
#include "arakzeta/field.hpp"
#include "arakzeta/special.hpp"

namespace arakzeta {

namespace {

using i128 = __int128;
using boost::multiprecision::cpp_int;

// Z[omega] with omega = (1 + sqrt m)/2 when m = 1 mod 4, else sqrt m.
struct QuadRing {
    long long m = 0;
    long long D = 0;  // field discriminant
    i128 tr = 0;      // omega + omega'
    i128 nw = 0;      // omega * omega'
};

struct Elem {
    i128 x, y;  // x + y omega
};

struct Ideal {
    i128 a, b, c;  // Z-basis {a, b + c omega}
};

long long mod4(long long m) { return ((m % 4) + 4) % 4; }

QuadRing ring_of(long long m) {
    QuadRing R;
    R.m = m;
    if (mod4(m) == 1) {
        R.D = m;
        R.tr = 1;
        R.nw = (1 - m) / 4;
    } else {
        R.D = 4 * m;
        R.tr = 0;
        R.nw = -m;
    }
    return R;
}

i128 norm(const QuadRing& R, Elem e) { return e.x * e.x + R.tr * e.x * e.y + R.nw * e.y * e.y; }

Elem mul(const QuadRing& R, Elem p, Elem q) {
    // omega^2 = tr omega - nw
    const i128 yy = p.y * q.y;
    return {p.x * q.x - R.nw * yy, p.x * q.y + q.x * p.y + R.tr * yy};
}

Elem conj(const QuadRing& R, Elem e) { return {e.x + R.tr * e.y, -e.y}; }

i128 iabs(i128 v) { return v < 0 ? -v : v; }

i128 igcd(i128 a, i128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        const i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i128 floor_mod(i128 a, i128 b) { return a - floor_div(a, b) * b; }

// Hermite normal form of the Z-module spanned by gens (must have rank 2).
Ideal hnf(std::vector<Elem> v) {
    for (;;) {
        int piv = -1;
        for (int i = 0; i < static_cast<int>(v.size()); ++i)
            if (v[i].y != 0 && (piv < 0 || iabs(v[i].y) < iabs(v[piv].y))) piv = i;
        if (piv < 0) throw NumericError("ideal basis has rank < 2");
        bool done = true;
        for (int i = 0; i < static_cast<int>(v.size()); ++i) {
            if (i == piv || v[i].y == 0) continue;
            const i128 q = v[i].y / v[piv].y;
            v[i].x -= q * v[piv].x;
            v[i].y -= q * v[piv].y;
            if (v[i].y != 0) done = false;
        }
        if (done) {
            Elem p = v[piv];
            if (p.y < 0) p = {-p.x, -p.y};
            i128 a = 0;
            for (int i = 0; i < static_cast<int>(v.size()); ++i)
                if (i != piv) a = igcd(a, v[i].x);
            if (a == 0) throw NumericError("ideal basis has rank < 2");
            return {a, floor_mod(p.x, a), p.y};
        }
    }
}

Ideal ideal_mul(const QuadRing& R, const Ideal& I, const Ideal& J) {
    const Elem g1[2] = {{I.a, 0}, {I.b, I.c}};
    const Elem g2[2] = {{J.a, 0}, {J.b, J.c}};
    std::vector<Elem> gens;
    for (const auto& p : g1)
        for (const auto& q : g2) gens.push_back(mul(R, p, q));
    return hnf(gens);
}

Ideal ideal_conj(const QuadRing& R, const Ideal& I) { return hnf({{I.a, 0}, conj(R, {I.b, I.c})}); }

i128 isqrt(i128 n) {
    if (n < 0) return -1;
    i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Some alpha in I with |N(alpha)| = N(I), or nothing. unit_bound is the
// fundamental unit (real fields) or 1; it bounds the search box.
std::optional<Elem> principal_generator(const QuadRing& R, const Ideal& I, double unit_bound) {
    const i128 N = I.a * I.c;
    const double sd = std::sqrt(std::abs(static_cast<double>(R.D)));
    const double ymax = R.m > 0 ? 2.0 * std::sqrt(static_cast<double>(N) * unit_bound) / sd
                                : 2.0 * std::sqrt(static_cast<double>(N)) / sd;
    const double vmax_d = ymax / static_cast<double>(I.c) + 1.0;
    if (!(vmax_d < 5e7)) throw CapabilityError("principal ideal search too large for this field");
    const long long vmax = static_cast<long long>(vmax_d);
    // N(u a + v(b + c omega)) = A u^2 + B v u + C v^2
    const i128 A = I.a * I.a;
    const i128 B = I.a * (2 * I.b + R.tr * I.c);
    const i128 C = I.b * I.b + R.tr * I.b * I.c + R.nw * I.c * I.c;
    for (long long k = 0; k <= 2 * vmax; ++k) {
        const i128 v = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
        for (int sgn = 1; sgn >= -1; sgn -= 2) {
            const i128 T = sgn * N;
            const i128 disc = B * B * v * v - 4 * A * (C * v * v - T);
            if (disc < 0) continue;
            const i128 s = isqrt(disc);
            if (s * s != disc) continue;
            for (int pm = 1; pm >= -1; pm -= 2) {
                const i128 num = -B * v + pm * s;
                if (num % (2 * A) != 0) continue;
                const i128 u = num / (2 * A);
                const Elem e{u * I.a + v * I.b, v * I.c};
                if (iabs(norm(R, e)) == N) return e;
            }
        }
    }
    return std::nullopt;
}

bool principal(const QuadRing& R, const Ideal& I, double unit_bound) {
    return principal_generator(R, I, unit_bound).has_value();
}

struct FundamentalUnit {
    cpp_int x, y;  // epsilon = x + y omega > 1
    long double log_eps;
    int norm_sign;
};

cpp_int floor_div_big(const cpp_int& a, const cpp_int& b) {
    cpp_int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Continued fraction of omega = (P0 + sqrt m)/Q0; the first convergent p/q
// with N(p - q omega) = +-1 gives epsilon = p - q omega'.
FundamentalUnit fundamental_unit(const QuadRing& R) {
    const long long m = R.m;
    const cpp_int sm = static_cast<long long>(std::floor(std::sqrt(static_cast<long double>(m))));
    cpp_int P = (R.tr == 1) ? 1 : 0;
    cpp_int Q = (R.tr == 1) ? 2 : 1;
    cpp_int p1 = 1, p2 = 0, q1 = 0, q2 = 1;
    const cpp_int tr = static_cast<long long>(R.tr);
    const cpp_int nw = static_cast<long long>(R.nw);
    for (int k = 0; k < 100000; ++k) {
        // floor((P + sqrt m)/Q) with sqrt m irrational
        const cpp_int a = Q > 0 ? floor_div_big(P + sm, Q) : floor_div_big(-P - sm - 1, -Q);
        const cpp_int p = a * p1 + p2;
        const cpp_int q = a * q1 + q2;
        const cpp_int nrm = p * p - tr * p * q + nw * q * q;
        if (nrm == 1 || nrm == -1) {
            FundamentalUnit u;
            u.x = p - q * tr;  // p - q omega' = (p - q tr) + q omega
            u.y = q;
            const long double sq = std::sqrt(static_cast<long double>(m));
            const long double big = (R.tr == 1) ? static_cast<long double>(p) + static_cast<long double>(q) * (sq - 1) / 2
                                                : static_cast<long double>(p) + static_cast<long double>(q) * sq;
            u.log_eps = std::log(big);
            u.norm_sign = nrm == 1 ? 1 : -1;
            return u;
        }
        p2 = p1;
        p1 = p;
        q2 = q1;
        q1 = q;
        P = a * Q - P;
        Q = (cpp_int(m) - P * P) / Q;
    }
    throw NumericError("fundamental unit: continued fraction did not close");
}

// Embedding coordinates of x + y omega: (sigma1, sigma2) for m > 0, (Re, Im) for m < 0.
std::pair<long double, long double> embed(const QuadRing& R, long double x, long double y) {
    const long double s = std::sqrt(std::abs(static_cast<long double>(R.m)));
    if (R.m > 0) {
        if (R.tr == 1) return {x + y * (1 + s) / 2, x + y * (1 - s) / 2};
        return {x + y * s, x - y * s};
    }
    if (R.tr == 1) return {x + y / 2, y * s / 2};
    return {x, y * s};
}

}  // namespace

bool is_squarefree(long long m) {
    long long a = m < 0 ? -m : m;
    if (a == 0) return false;
    for (long long p = 2; p * p <= a; ++p)
        if (a % (p * p) == 0) return false;
    return true;
}

long long fundamental_discriminant(long long m) { return mod4(m) == 1 ? m : 4 * m; }

NumberFieldData make_quadratic(long long m) {
    if (m == 0 || m == 1) throw InputError("make_quadratic: m must differ from 0 and 1");
    if (!is_squarefree(m)) throw InputError("make_quadratic: m = " + std::to_string(m) + " is not squarefree");
    if (std::abs(m) > 1000000) throw CapabilityError("make_quadratic: |m| > 10^6 not supported");

    const QuadRing R = ring_of(m);
    NumberFieldData F;
    F.degree_n = 2;
    F.discriminant = R.D;
    F.disc_abs = static_cast<double>(std::abs(R.D));
    F.different_norm = F.disc_abs;
    F.mu_count = (m == -1) ? 4 : (m == -3) ? 6 : 2;

    double unit_bound = 1.0;
    if (m > 0) {
        F.r1 = 2;
        F.r2 = 0;
        const FundamentalUnit u = fundamental_unit(R);
        const double le = static_cast<double>(u.log_eps);
        F.regulator = le;
        F.unit_logs = {{le, -le}};
        unit_bound = std::exp(le);
        if (!std::isfinite(unit_bound)) throw CapabilityError("make_quadratic: fundamental unit too large");
    } else {
        F.r1 = 0;
        F.r2 = 1;
        F.regulator = 1.0;
    }
    F.unit_rank_r = F.r1 + F.r2 - 1;

    // Every class holds a primitive ideal a Z + (b + omega) Z of norm a <= Minkowski bound.
    const double sd = std::sqrt(F.disc_abs);
    const double mink = m > 0 ? sd / 2.0 : 2.0 * sd / kPi;
    std::vector<Ideal> reps = {{1, 0, 1}};
    for (long long a = 2; a <= static_cast<long long>(std::floor(mink)); ++a) {
        for (long long b = 0; b < a; ++b) {
            if (norm(R, {b, 1}) % a != 0) continue;
            const Ideal cand{a, b, 1};
            bool known = false;
            for (const auto& J : reps)
                if (principal(R, ideal_mul(R, cand, ideal_conj(R, J)), unit_bound)) {
                    known = true;
                    break;
                }
            if (!known) reps.push_back(cand);
        }
    }
    F.class_number_h = static_cast<int>(reps.size());

    for (const auto& I : reps) {
        IdealLatticeBasis B;
        B.norm = static_cast<double>(I.a * I.c);
        B.embedding.resize(2, 2);
        const auto e0 = embed(R, static_cast<long double>(I.a), 0);
        const auto e1 = embed(R, static_cast<long double>(I.b), static_cast<long double>(I.c));
        B.embedding << static_cast<double>(e0.first), static_cast<double>(e0.second), static_cast<double>(e1.first),
            static_cast<double>(e1.second);
        F.ideal_classes.push_back(B);
    }

    // kappa pairing: d = (sqrt D), a^{-1} = conj(a)/N(a), conj(a_c) conj(a_*) = (beta).
    const long double half_log_d = 0.5L * std::log(static_cast<long double>(F.disc_abs));
    for (std::size_t c = 0; c < reps.size(); ++c) {
        const Ideal ac = ideal_conj(R, reps[c]);
        bool done = false;
        for (std::size_t s = 0; s < reps.size() && !done; ++s) {
            const auto beta = principal_generator(R, ideal_mul(R, ac, ideal_conj(R, reps[s])), unit_bound);
            if (!beta) continue;
            const long double base = -half_log_d - std::log(static_cast<long double>(reps[c].a * reps[c].c)) -
                                     std::log(static_cast<long double>(reps[s].a * reps[s].c));
            const long double nb = std::abs(static_cast<long double>(norm(R, *beta)));
            KappaPairing k;
            k.dual_class = static_cast<int>(s);
            if (m > 0) {
                auto [s1, s2] = embed(R, static_cast<long double>(beta->x), static_cast<long double>(beta->y));
                s1 = std::abs(s1);
                s2 = std::abs(s2);
                // the smaller embedding is recovered from the norm to avoid cancellation
                if (s1 >= s2)
                    s2 = nb / s1;
                else
                    s1 = nb / s2;
                k.log_gamma = {static_cast<double>(base + std::log(s1)), static_cast<double>(base + std::log(s2))};
            } else {
                k.log_gamma = {static_cast<double>(2 * base + std::log(nb))};
            }
            F.kappa.push_back(k);
            done = true;
        }
        if (!done) throw NumericError("make_quadratic: could not pair class with its kappa twist");
    }

    validate(F);
    return F;
}

}  // namespace arakzeta
