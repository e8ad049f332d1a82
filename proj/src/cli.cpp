#include "arakzeta/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "arakzeta/errors.hpp"
#include "arakzeta/ffzeta.hpp"
#include "arakzeta/kernels.hpp"
#include "arakzeta/oscint.hpp"
#include "arakzeta/parallel.hpp"
#include "arakzeta/special.hpp"
#include "arakzeta/specs.hpp"
#include "arakzeta/verify.hpp"
#include "arakzeta/zeta_nf.hpp"

namespace arakzeta::cli {



namespace {

double parse_double(const std::string& t) {
    if (t.empty()) throw InputError("empty number");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || !std::isfinite(v)) throw InputError("bad number '" + t + "'");
    return v;
}

cplx parse_complex(const std::string& t) {
    const auto comma = t.find(',');
    if (comma == std::string::npos) return parse_double(t);
    return {parse_double(t.substr(0, comma)), parse_double(t.substr(comma + 1))};
}

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Output sink: a file when a path is given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw InputError("cannot open output file " + path);
        }
    }
    std::ostream& out() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void print_error(const char* kind, const std::string& message) {
    std::string m;
    for (char c : message) {
        if (c == '"' || c == '\\') m += '\\';
        m += c == '\n' ? ' ' : c;
    }
    std::cerr << "error: kind=" << kind << " message=\"" << m << "\"\n";
}

struct Common {
    int grid = 256;
    double theta_tol = 1e-10;
    double t_tol = 1e-10;
    double w_small = 1e-6;
    std::string output;
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--grid", c.grid, "class-space grid points per torus dimension")->check(CLI::PositiveNumber);
    app->add_option("--theta-tol", c.theta_tol, "theta series truncation tolerance");
    app->add_option("--t-tol", c.t_tol, "t-quadrature tolerance");
    app->add_option("--w-small", c.w_small, "switch to the series form of (y^w - 1)/w below this |w|");
    app->add_option("--output", c.output, "output file (default stdout)");
}

ZetaEvalParams params_of(const Common& c) {
    ZetaEvalParams p;
    p.grid_points = c.grid;
    p.theta_tol = c.theta_tol;
    p.t_tol = c.t_tol;
    p.w_small = c.w_small;
    check_params(p);
    return p;
}

int report(std::ostream& os, const std::vector<CheckResult>& checks) {
    int failed = 0;
    for (const auto& c : checks) {
        const char* tag = c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL");
        os << tag << "  " << c.name << "  " << c.detail << "\n";
        failed += c.passed ? 0 : 1;
    }
    os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << "\n";
    return failed == 0 ? 0 : 1;
}

int cmd_ffzeta(const std::string& spec, const Common& c) {
    Sink sink(c.output);
    auto& os = sink.out();
    const auto C = curve_from_spec(spec);
    const auto Z = zeta_two_var(C);
    os << "Z(T, u) numerator: " << Z.num.to_string() << "\n";
    os << "Z(T, u) denominator: " << Z.den.to_string() << "\n";
    const auto P = extract_P(Z, C.genus);
    os << "P(T, u) = " << BiPoly::from_coeffs_in_T(P).to_string() << "\n";
    for (std::size_t i = 0; i < P.size(); ++i) os << "P_" << i << "(u) = " << upoly_to_string(P[i], "u") << "\n";
    const auto fe = check_functional_equation(P, C.genus);
    os << "degree bounds: ok\n";
    os << "functional equation: " << (fe.ok ? "ok" : "violated at index " + std::to_string(fe.first_bad)) << "\n";
    const auto cl = specialize_u(Z, mpq_class(static_cast<long>(C.q)));
    os << "classical numerator at u = q: " << upoly_to_string(cl.num, "T") << "\n";
    return fe.ok ? 0 : 1;
}

int cmd_nfzeta(const std::string& field, const std::string& fn, const std::string& s_text,
               const std::string& w_text, const Common& c) {
    if (fn != "zeta_xk" && fn != "zeta" && fn != "L") throw InputError("--function must be zeta_xk, zeta or L");
    const auto S = parse_range(s_text);
    const auto W = parse_range(w_text);
    NfZetaEvaluator ev(field_from_spec(field), params_of(c));
    Sink sink(c.output);
    auto& os = sink.out();
    os << "s_re,s_im,w_re,w_im,value_re,value_im,est_error\n";
    for (const auto& s : S)
        for (const auto& w : W) {
            const auto v = fn == "zeta_xk" ? ev.zeta_Xk(s, w) : fn == "zeta" ? ev.zeta_normalized(s, w) : ev.L_H1(s, w);
            os << num(s.real()) << ',' << num(s.imag()) << ',' << num(w.real()) << ',' << num(w.imag()) << ','
               << num(v.value.real()) << ',' << num(v.value.imag()) << ',' << num(v.est_error) << "\n";
        }
    return 0;
}

int cmd_invariants(const std::string& field, const Common& c) {
    const auto F = field_from_spec(field);
    const auto g = build_grid(F, c.grid);
    const auto inv = invariants_on_grid(F, g);
    Sink sink(c.output);
    auto& os = sink.out();
    os << "class";
    for (int i = 0; i < F.unit_rank_r; ++i) os << ",theta_" << i + 1;
    os << ",a,b,nu\n";
    for (std::size_t k = 0; k < g.points.size(); ++k) {
        os << g.points[k].class_index;
        for (double t : g.points[k].theta) os << ',' << num(t);
        os << ',' << num(inv[k].a) << ',' << num(inv[k].b) << ',' << inv[k].nu << "\n";
    }
    return 0;
}

int cmd_oscint(const std::string& field, const std::string& s_text, const Common& c) {
    const auto F = field_from_spec(field);
    const auto S = parse_range(s_text);
    const auto g = build_grid(F, c.grid);
    const auto inv = invariants_on_grid(F, g);
    Sink sink(c.output);
    auto& os = sink.out();
    os << "s_re,s_im,C_re,C_im,ratio_re,ratio_im,C_tilde_re,C_tilde_im\n";
    for (const auto& s : S) {
        const cplx C = C_integral(g, inv, s);
        const cplx R = asymptotic_ratio(F, C, s);
        const cplx Ct = C_tilde(F, g, inv, s);
        os << num(s.real()) << ',' << num(s.imag()) << ',' << num(C.real()) << ',' << num(C.imag()) << ','
           << num(R.real()) << ',' << num(R.imag()) << ',' << num(Ct.real()) << ',' << num(Ct.imag()) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& field, const std::string& curve, const Common& c) {
    std::vector<CheckResult> all;
    auto append = [&](std::vector<CheckResult> v) { all.insert(all.end(), v.begin(), v.end()); };
    VerifyOptions opt;
    opt.grid_points = c.grid;
    if (!field.empty()) append(verify_field(field_from_spec(field), opt));
    if (!curve.empty()) append(verify_curve(curve_from_spec(curve)));
    append(verify_oscint_core());
    append(verify_regularization());
    append(verify_ffzeta_core(opt.seed));
    Sink sink(c.output);
    return report(sink.out(), all);
}

}  // namespace

std::vector<cplx> parse_range(const std::string& text) {
    const auto a = text.find(':');
    if (a == std::string::npos) return {parse_complex(text)};
    const auto b = text.find(':', a + 1);
    if (b == std::string::npos || text.find(':', b + 1) != std::string::npos)
        throw InputError("range must be start:stop:count");
    const cplx lo = parse_complex(text.substr(0, a)), hi = parse_complex(text.substr(a + 1, b - a - 1));
    const double cnt = parse_double(text.substr(b + 1));
    if (cnt < 1 || cnt != std::floor(cnt) || cnt > 1e6) throw InputError("range count must be a positive integer");
    const int n = static_cast<int>(cnt);
    std::vector<cplx> out(n);
    for (int i = 0; i < n; ++i) out[i] = n == 1 ? lo : lo + (hi - lo) * (static_cast<double>(i) / (n - 1));
    return out;
}

int run(int argc, char** argv) {
    apply_thread_cap();
    CLI::App app{"Two-variable zeta functions of curves and number fields"};
    app.require_subcommand(1);
    Common common;
    std::string field = "builtin:Q", curve, fn = "zeta", s_text = "2", w_text = "1";

    auto* ff = app.add_subcommand("ffzeta", "exact two-variable zeta of curve data");
    ff->add_option("--curve", curve, "builtin:p1:q | builtin:ell:q:N | file:path")->required();
    add_common(ff, common);

    auto* nf = app.add_subcommand("nfzeta", "tabulate number-field zeta functions (CSV)");
    nf->add_option("--field", field, "builtin:Q | builtin:quad:m | file:path");
    nf->add_option("--function", fn, "zeta_xk | zeta | L");
    nf->add_option("--s", s_text, "re[,im] or start:stop:count");
    nf->add_option("--w", w_text, "re[,im] or start:stop:count");
    add_common(nf, common);

    auto* iv = app.add_subcommand("invariants", "a, b, nu over the class-space grid (CSV)");
    iv->add_option("--field", field, "builtin:Q | builtin:quad:m | file:path");
    add_common(iv, common);

    auto* os = app.add_subcommand("oscint", "C(s), asymptotic ratio and C~(s) (CSV)");
    os->add_option("--field", field, "builtin:Q | builtin:quad:m | file:path");
    os->add_option("--s", s_text, "re[,im] or start:stop:count");
    add_common(os, common);

    auto* rp = app.add_subcommand("regprod", "regularized product check suite");
    add_common(rp, common);

    std::string vfield, vcurve;
    auto* vf = app.add_subcommand("verify", "run the invariant suite; exit 0 iff all pass");
    vf->add_option("--field", vfield, "builtin:Q | builtin:quad:m | file:path");
    vf->add_option("--curve", vcurve, "builtin:p1:q | builtin:ell:q:N | file:path");
    add_common(vf, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("usage", e.what());
        return 2;
    }

    try {
        if (*ff) return cmd_ffzeta(curve, common);
        if (*nf) return cmd_nfzeta(field, fn, s_text, w_text, common);
        if (*iv) return cmd_invariants(field, common);
        if (*os) return cmd_oscint(field, s_text, common);
        if (*rp) {
            Sink sink(common.output);
            return report(sink.out(), verify_regularization());
        }
        if (*vf) {
            if (!vf->count("--grid")) common.grid = 64;
            return cmd_verify(vfield, vcurve, common);
        }
    } catch (const InputError& e) {
        print_error(e.kind(), e.what());
        return 2;
    } catch (const Error& e) {
        print_error(e.kind(), e.what());
        return 1;
    } catch (const std::exception& e) {
        print_error("internal", e.what());
        return 1;
    }
    return 2;
}

}  // namespace arakzeta::cli
