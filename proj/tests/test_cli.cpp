#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "arakzeta/cli.hpp"
#include "arakzeta/errors.hpp"
#include "arakzeta/field.hpp"
#include "arakzeta/zeta_nf.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arakzeta;

namespace {

struct Run {
    int code;
    std::string out;
};

// Runs the CLI binary with stderr folded into the captured output.
Run run_cli(const std::string& args, const std::string& env = "") {
    const char* bin = std::getenv("ARAKZETA_CLI");
    REQUIRE(bin != nullptr);
    const std::string cmd = env + " " + bin + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), p)) out += buf.data();
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("range parsing") {
    CHECK(cli::parse_range("2") == std::vector<std::complex<double>>{2.0});
    CHECK(cli::parse_range("1.5,-2") == std::vector<std::complex<double>>{{1.5, -2.0}});
    const auto r = cli::parse_range("0:1,2:3");
    REQUIRE(r.size() == 3);
    CHECK(r[1] == std::complex<double>(0.5, 1.0));
    CHECK(r[2] == std::complex<double>(1.0, 2.0));
    CHECK_THROWS_AS(cli::parse_range("1:2"), InputError);
    CHECK_THROWS_AS(cli::parse_range("1:2:0"), InputError);
    CHECK_THROWS_AS(cli::parse_range("x"), InputError);
    CHECK_THROWS_AS(cli::parse_range("1:2:2.5"), InputError);
}

TEST_CASE("ffzeta prints the elliptic P") {
    const auto r = run_cli("ffzeta --curve builtin:ell:2:5");
    CHECK(r.code == 0);
    CHECK(r.out.find("P(T, u) = 1 + (4 - u)*T + u*T^2") != std::string::npos);
    CHECK(r.out.find("functional equation: ok") != std::string::npos);
    const auto f = run_cli("ffzeta --curve file:" + oracle::data_path("genus2_q5.json"));
    CHECK(f.code == 0);
}

TEST_CASE("nfzeta matches the Dedekind oracle and is deterministic") {
    const auto r = run_cli("nfzeta --field builtin:quad:5 --s 2 --w 1");
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "s_re,s_im,w_re,w_im,value_re,value_im,est_error");
    double sr, si, wr, wi, vr, vi, err;
    REQUIRE(std::sscanf(ls[1].c_str(), "%lf,%lf,%lf,%lf,%lf,%lf,%lf", &sr, &si, &wr, &wi, &vr, &vi, &err) == 7);
    const auto ref = dedekind_zeta_completed(make_quadratic(5), 2.0);
    CHECK(std::abs(std::complex<double>(vr, vi) - ref) <= std::max(err, 1e-12) + 1e-10);
    const std::string args = "nfzeta --field builtin:quad:-15 --function L --s -1,0.5:2,1:4 --w 0.5:1.5:3 --grid 32";
    const auto a = run_cli(args), b = run_cli(args), c = run_cli(args, "ARAKZETA_THREADS=1");
    CHECK(a.code == 0);
    CHECK(lines(a.out).size() == 13);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("invariants and oscint tables") {
    const auto r = run_cli("invariants --field builtin:quad:2 --grid 16");
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    CHECK(ls[0] == "class,theta_1,a,b,nu");
    CHECK(ls.size() == 17);
    const auto o = run_cli("oscint --field builtin:Q --s 2:10:5");
    REQUIRE(o.code == 0);
    const auto lo = lines(o.out);
    REQUIRE(lo.size() == 6);
    CHECK(lo[1].rfind("2,0,2,0,", 0) == 0);
}

TEST_CASE("verify and regprod") {
    CHECK(run_cli("verify --field builtin:Q").code == 0);
    CHECK(run_cli("verify --field file:" + oracle::data_path("quad_m15.json")).code == 0);
    CHECK(run_cli("verify --curve builtin:ell:3:7").code == 0);
    const auto r = run_cli("regprod");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("exit codes and error lines") {
    const auto u = run_cli("nfzeta --bogus");
    CHECK(u.code == 2);
    CHECK(u.out.find("error: kind=usage") != std::string::npos);
    CHECK(run_cli("").code == 2);
    const auto i = run_cli("nfzeta --field builtin:quad:4");
    CHECK(i.code == 2);
    CHECK(i.out.find("error: kind=input") != std::string::npos);
    CHECK(run_cli("ffzeta --curve builtin:p1:6").code == 2);
    CHECK(run_cli("nfzeta --s 1:2").code == 2);
    const auto p = run_cli("nfzeta --field builtin:Q --s 0 --w 1");
    CHECK(p.code == 1);
    CHECK(p.out.find("error: kind=pole") != std::string::npos);
    CHECK(run_cli("nfzeta --t-tol 0").code == 2);
}
