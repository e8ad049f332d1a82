#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "arakzeta/kernels.hpp"

namespace arakzeta {

struct ZetaEvalParams {
    int grid_points = 256;  // per torus dimension
    double t_tol = 1e-10;
    double theta_tol = 1e-10;
    double w_small = 1e-6;
    Exec exec = Exec::parallel;
};

void check_params(const ZetaEvalParams& p);

struct TwoVarZetaValue {
    std::complex<double> value;
    double est_error = 0.0;
    std::complex<double> s;
    std::complex<double> w;
};

struct FwRatio {
    std::complex<double> value;      // f_w(s)
    std::complex<double> minus_one;  // f_w(s) - 1, summed without cancellation
    double est_error = 0.0;          // bound on the error of minus_one
};

// w^{-1}((1+x)^w - 1), switching to log(1+x) + (w/2) log(1+x)^2 for |w| < w_small.
std::complex<double> power_minus_one_over_w(double x, std::complex<double> w, double w_small);

// Evaluator for one field and one parameter set. Lattice data on the class
// space grid is computed once at construction; methods are not thread-safe
// because the direct-integral lattice data is built lazily.
class NfZetaEvaluator {
public:
    NfZetaEvaluator(const NumberFieldData& F, const ZetaEvalParams& params = {});

    const NumberFieldData& field() const { return F_; }
    const ZetaEvalParams& params() const { return p_; }

    // int_0^{sqrt d} int w^{-1}(k0(D + D_t)^w - 1) d0D t^{-s} dt/t
    TwoVarZetaValue J(std::complex<double> s, std::complex<double> w);
    TwoVarZetaValue zeta_Xk(std::complex<double> s, std::complex<double> w);
    TwoVarZetaValue zeta_normalized(std::complex<double> s, std::complex<double> w);
    TwoVarZetaValue L_H1(std::complex<double> s, std::complex<double> w);

    // zeta_Xk by direct integration over the whole t-line of (k0^w - 1) N^{-s},
    // valid for Re s > max(Re w, 0).
    TwoVarZetaValue zeta_Xk_split(std::complex<double> s, std::complex<double> w);
    // zeta_Xk by direct integration of k0^w N^{-s}, valid for Re w < Re s < 0.
    TwoVarZetaValue zeta_Xk_direct(std::complex<double> s, std::complex<double> w);

    // A(s) from the grid of this evaluator.
    std::complex<double> A(std::complex<double> s) const;
    // Re s > max(Re w, 0). Requires k1 data (kappa) for t > sqrt d.
    FwRatio f_w_ratio(std::complex<double> s, std::complex<double> w);

    bool has_dual() const { return fine_.dual_scale > 0.0; }

private:
    struct KPair {
        std::vector<std::complex<double>> value;  // one per exponent
        std::vector<double> err;
    };
    // int_0^vmax e^{u v} G_w(v) dv for each u, on the fine grid, with the
    // coarse-grid difference folded into err.
    KPair K(const std::vector<std::complex<double>>& us, std::complex<double> w);
    double vmax_for(double sigma, std::complex<double> w) const;
    void ensure_long(double V);

    NumberFieldData F_;
    ZetaEvalParams p_;
    ClassSpaceGrid grid_fine_, grid_coarse_;
    ThetaProfiles fine_, coarse_;
    ThetaProfiles long_;
    double long_V_ = -1.0;
    double hR_ = 1.0;
    int nu_max_ = 2;
};

// Completed Dedekind zeta of Q or a quadratic field, from zeta(s) L(s, chi_D)
// with Hurwitz-zeta evaluation of the L-series. Re s >= 1.5.
std::complex<double> dedekind_zeta_completed(const NumberFieldData& F, std::complex<double> s);
std::complex<double> dedekind_zeta(const NumberFieldData& F, std::complex<double> s);

// Kronecker symbol (D / n) for n >= 0.
int kronecker_symbol(long long D, long long n);

}  // namespace arakzeta
