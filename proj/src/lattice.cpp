#include "arakzeta/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arakzeta/errors.hpp"

namespace arakzeta {

namespace {

using IntMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

void check_spd(const Eigen::MatrixXd& G) {
    if (G.rows() == 0 || G.rows() != G.cols()) throw NumericError("gram matrix must be square and nonempty");
    if (!G.allFinite()) throw NumericError("gram matrix has non-finite entries");
    const double scale = G.cwiseAbs().maxCoeff();
    if ((G - G.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw NumericError("gram matrix is not symmetric");
    Eigen::LLT<Eigen::MatrixXd> llt(G);
    if (llt.info() != Eigen::Success) throw NumericError("gram matrix is not positive definite");
    const Eigen::MatrixXd L = llt.matrixL();
    for (Eigen::Index i = 0; i < L.rows(); ++i)
        if (!(L(i, i) > 0.0)) throw NumericError("gram matrix is not positive definite");
}

void gram_schmidt(const Eigen::MatrixXd& G, Eigen::MatrixXd& mu, Eigen::VectorXd& B) {
    const Eigen::Index n = G.rows();
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
    mu = Eigen::MatrixXd::Identity(n, n);
    B.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            double v = G(i, j);
            for (Eigen::Index k = 0; k < j; ++k) v -= mu(j, k) * r(i, k);
            r(i, j) = v;
            if (j < i) mu(i, j) = v / r(j, j);
        }
        B(i) = r(i, i);
    }
}

// Branch-and-bound state for one subtree.
struct Enumerator {
    const Eigen::MatrixXd& q;
    double bound;
    std::vector<double> c;
    std::vector<IntVec>* coords_out;   // may be null
    std::vector<double>* values_out;

    void emit() {
        bool zero = true;
        for (double v : c) zero = zero && v == 0.0;
        if (zero) return;
        const auto n = static_cast<Eigen::Index>(c.size());
        double val = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            double t = c[i];
            for (Eigen::Index j = i + 1; j < n; ++j) t += q(i, j) * c[j];
            val += q(i, i) * t * t;
        }
        values_out->push_back(val);
        if (coords_out) {
            IntVec iv(c.size());
            for (std::size_t i = 0; i < c.size(); ++i) iv[i] = static_cast<std::int64_t>(c[i]);
            coords_out->push_back(std::move(iv));
        }
    }

    void range(int i, double rem, double& center, std::int64_t& lo, std::int64_t& hi) const {
        center = 0.0;
        for (std::size_t j = i + 1; j < c.size(); ++j) center -= q(i, j) * c[j];
        const double rad = std::sqrt(std::max(0.0, rem) / q(i, i));
        lo = static_cast<std::int64_t>(std::ceil(center - rad - 1e-12));
        hi = static_cast<std::int64_t>(std::floor(center + rad + 1e-12));
    }

    void rec(int i, double rem) {
        double center;
        std::int64_t lo, hi;
        range(i, rem, center, lo, hi);
        for (std::int64_t v = lo; v <= hi; ++v) {
            const double d = static_cast<double>(v) - center;
            const double used = q(i, i) * d * d;
            if (used > rem * (1.0 + 1e-12) + 1e-300) continue;
            c[i] = static_cast<double>(v);
            if (i == 0)
                emit();
            else
                rec(i - 1, rem - used);
        }
        c[i] = 0.0;
    }
};

struct Reduced {
    Eigen::MatrixXd G;  // reduced Gram
    IntMat U;
    Eigen::MatrixXd q;  // Cholesky coefficients of G
};

Reduced prepare(const Eigen::MatrixXd& G) {
    check_spd(G);
    Reduced red;
    red.G = lll_reduce(G, red.U);
    Eigen::LLT<Eigen::MatrixXd> llt(red.G);
    if (llt.info() != Eigen::Success) throw NumericError("gram matrix is not positive definite after reduction");
    const Eigen::MatrixXd R = llt.matrixU();
    const Eigen::Index n = R.rows();
    red.q = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        red.q(i, i) = R(i, i) * R(i, i);
        for (Eigen::Index j = i + 1; j < n; ++j) red.q(i, j) = R(i, j) / R(i, i);
    }
    return red;
}

// Enumerate in reduced coordinates, splitting on the last coordinate.
void run(const Reduced& red, double bound, bool want_coords, bool parallel, std::vector<IntVec>& coords,
         std::vector<double>& values) {
    const int n = static_cast<int>(red.q.rows());
    const double ebound = bound * (1.0 + 1e-10);
    Enumerator top{red.q, ebound, std::vector<double>(n, 0.0), nullptr, nullptr};
    double center;
    std::int64_t lo, hi;
    top.range(n - 1, ebound, center, lo, hi);
    const std::int64_t count = hi >= lo ? hi - lo + 1 : 0;
    std::vector<std::vector<IntVec>> part_c(count);
    std::vector<std::vector<double>> part_v(count);

#pragma omp parallel for schedule(dynamic) if (parallel && count > 1)
    for (std::int64_t k = 0; k < count; ++k) {
        Enumerator e{red.q, ebound, std::vector<double>(n, 0.0), want_coords ? &part_c[k] : nullptr, &part_v[k]};
        const double v = static_cast<double>(lo + k);
        const double d = v - center;
        const double used = red.q(n - 1, n - 1) * d * d;
        if (used > ebound * (1.0 + 1e-12)) continue;
        e.c[n - 1] = v;
        if (n == 1)
            e.emit();
        else
            e.rec(n - 2, ebound - used);
    }
    for (std::int64_t k = 0; k < count; ++k) {
        values.insert(values.end(), part_v[k].begin(), part_v[k].end());
        if (want_coords)
            for (auto& c : part_c[k]) coords.push_back(std::move(c));
    }
}

std::vector<LatticeVector> enumerate_impl(const Eigen::MatrixXd& G, double bound, bool parallel) {
    if (!(bound > 0.0)) return {};
    const Reduced red = prepare(G);
    std::vector<IntVec> rc;
    std::vector<double> rv;
    run(red, bound, true, parallel, rc, rv);

    const Eigen::Index n = G.rows();
    std::vector<LatticeVector> out;
    out.reserve(rc.size());
    for (const auto& cr : rc) {
        IntVec c(n, 0);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) c[i] += red.U(i, j) * cr[j];
        double val = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                val += static_cast<double>(c[i]) * G(i, j) * static_cast<double>(c[j]);
        if (val <= bound * (1.0 + 1e-12)) out.push_back({std::move(c), val});
    }
    std::sort(out.begin(), out.end(), [](const LatticeVector& a, const LatticeVector& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.coords < b.coords;
    });
    return out;
}

}  // namespace

Eigen::MatrixXd lll_reduce(const Eigen::MatrixXd& G0, IntMat& U, double delta) {
    Eigen::MatrixXd G = G0;
    const Eigen::Index n = G.rows();
    U = IntMat::Identity(n, n);
    Eigen::MatrixXd mu;
    Eigen::VectorXd B;
    Eigen::Index k = 1;
    int guard = 0;
    while (k < n && ++guard < 100000) {
        gram_schmidt(G, mu, B);
        for (Eigen::Index j = k - 1; j >= 0; --j) {
            const double qd = std::round(mu(k, j));
            if (qd == 0.0) continue;
            G.col(k) -= qd * G.col(j);
            G.row(k) -= qd * G.row(j);
            U.col(k) -= static_cast<std::int64_t>(qd) * U.col(j);
            gram_schmidt(G, mu, B);
        }
        if (B(k) >= (delta - mu(k, k - 1) * mu(k, k - 1)) * B(k - 1)) {
            ++k;
        } else {
            G.col(k).swap(G.col(k - 1));
            G.row(k).swap(G.row(k - 1));
            U.col(k).swap(U.col(k - 1));
            k = std::max<Eigen::Index>(k - 1, 1);
        }
    }
    return G;
}

std::vector<LatticeVector> enumerate_vectors(const Eigen::MatrixXd& G, double bound, Exec exec) {
    return enumerate_impl(G, bound, exec == Exec::parallel);
}

std::vector<LatticeVector> enumerate_vectors_serial(const Eigen::MatrixXd& G, double bound) {
    return enumerate_impl(G, bound, false);
}

std::vector<double> enumerate_norms(const Eigen::MatrixXd& G, double bound) {
    if (!(bound > 0.0)) return {};
    const Reduced red = prepare(G);
    std::vector<IntVec> unused;
    std::vector<double> v;
    run(red, bound, false, false, unused, v);
    std::erase_if(v, [&](double x) { return x > bound * (1.0 + 1e-12); });
    std::sort(v.begin(), v.end());
    return v;
}

double lattice_minimum(const Eigen::MatrixXd& G) {
    check_spd(G);
    IntMat U;
    const Eigen::MatrixXd Gr = lll_reduce(G, U);
    const double start = Gr.diagonal().minCoeff() * (1.0 + 1e-9);
    const auto v = enumerate_norms(G, start);
    if (v.empty()) throw NumericError("lattice_minimum: enumeration returned nothing");
    return v.front();
}

}  // namespace arakzeta
