#pragma once

// Independent reference computations and property generators shared by the tests.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double kPi = 3.14159265358979323846;

// Seeded generator for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    cplx complex_in(double re_lo, double re_hi, double im_lo, double im_hi) {
        return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
    }
    // Random positive definite Gram matrix with moderate condition number.
    Eigen::MatrixXd gram(int dim) {
        Eigen::MatrixXd B(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) B(i, j) = uniform(-1.0, 1.0) + (i == j ? 2.0 : 0.0);
        return B.transpose() * B;
    }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Values c^T G c of all nonzero integer vectors in the box |c_i| <= box.
inline std::vector<double> box_norms(const Eigen::MatrixXd& G, int box) {
    const int d = static_cast<int>(G.rows());
    std::vector<int> c(d, -box);
    std::vector<double> out;
    for (;;) {
        bool zero = true;
        Eigen::VectorXd v(d);
        for (int i = 0; i < d; ++i) {
            v[i] = c[i];
            zero = zero && c[i] == 0;
        }
        if (!zero) out.push_back(v.dot(G * v));
        int i = 0;
        while (i < d && c[i] == box) c[i++] = -box;
        if (i == d) break;
        ++c[i];
    }
    return out;
}

// Box radius guaranteeing every vector of value <= bound lies in the box.
inline int safe_box(const Eigen::MatrixXd& G, double bound) {
    const Eigen::MatrixXd inv = G.inverse();
    double m = 0.0;
    for (int i = 0; i < G.rows(); ++i) m = std::max(m, inv(i, i));
    return static_cast<int>(std::ceil(std::sqrt(bound * m))) + 1;
}

// Theta series sum_{c in Z^d} exp(-pi scale c^T G c) by box summation.
inline double theta_direct(const Eigen::MatrixXd& G, double scale) {
    const double bound = 40.0 / (kPi * scale) + 1.0;
    double s = 1.0;
    for (double v : box_norms(G, safe_box(G, bound))) s += std::exp(-kPi * scale * v);
    return s;
}

// Number of reduced primitive binary forms of discriminant D < 0 (class number).
inline long long class_number_forms(long long D) {
    long long h = 0;
    for (long long a = 1; 3 * a * a <= -D; ++a)
        for (long long b = -a + 1; b <= a; ++b) {
            const long long num = b * b - D;
            if (num % (4 * a)) continue;
            const long long c = num / (4 * a);
            if (c < a || (c == a && b < 0)) continue;
            long long g = std::gcd(std::gcd(a, std::llabs(b)), c);
            if (g == 1) ++h;
        }
    return h;
}

// Fundamental unit regulator of the real quadratic field of discriminant D > 0:
// smallest y > 0 with x^2 - D y^2 = +-4, regulator log((x + y sqrt D)/2).
inline double regulator_pell(long long D) {
    for (long long y = 1; y < 100000000; ++y) {
        for (long long sgn : {-4, 4}) {
            const long long x2 = D * y * y + sgn;
            if (x2 <= 0) continue;
            const long long x = std::llround(std::sqrt(static_cast<double>(x2)));
            for (long long xx = x - 1; xx <= x + 1; ++xx)
                if (xx > 0 && xx * xx == x2) return std::log((xx + y * std::sqrt(static_cast<double>(D))) / 2.0);
        }
    }
    return -1.0;
}

// Class number of a real quadratic field from the analytic class number formula
// h = sqrt(D) L(1, chi_D) / (2 R), with L(1, chi_D) from the finite log-sine sum.
inline long long class_number_real(long long D, double R) {
    // even primitive chi: L(1, chi) = -(1/sqrt D) sum_{a<D} chi(a) log sin(pi a / D)
    auto kron = [](long long d, long long n) {
        // Kronecker symbol (d/n), n > 0.
        int r = 1;
        while (n % 2 == 0) {
            n /= 2;
            const long long m8 = ((d % 8) + 8) % 8;
            if (m8 % 2 == 0) return 0;
            if (m8 == 3 || m8 == 5) r = -r;
        }
        long long a = ((d % n) + n) % n, b = n;
        while (a) {
            while (a % 2 == 0) {
                a /= 2;
                if (b % 8 == 3 || b % 8 == 5) r = -r;
            }
            std::swap(a, b);
            if (a % 4 == 3 && b % 4 == 3) r = -r;
            a %= b;
        }
        return b == 1 ? r : 0;
    };
    double L = 0.0;
    for (long long a = 1; a < D; ++a) L -= kron(D, a) * std::log(std::sin(kPi * a / D));
    L /= std::sqrt(static_cast<double>(D));
    return std::llround(std::sqrt(static_cast<double>(D)) * L / (2.0 * R));
}

// Composite Simpson on [a, b] with n (even) intervals.
template <class F>
cplx simpson(F&& f, double a, double b, int n) {
    const double h = (b - a) / n;
    cplx s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

inline std::string data_path(const std::string& name) {
    const char* dir = std::getenv("ARAKZETA_TEST_DATA");
    return std::string(dir ? dir : "tests/data") + "/" + name;
}

}  // namespace oracle
