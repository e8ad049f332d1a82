#include "arakzeta/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "arakzeta/errors.hpp"

namespace arakzeta {

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::string upoly_to_string(const UPoly& p, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        mpq_class c = p[i];
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0 || c != 1) os << c.get_str() << (i > 0 ? "*" : "");
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

BiPoly BiPoly::constant(const mpq_class& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const mpq_class& c, int dT, int du) {
    if (dT < 0 || du < 0) throw DomainError("monomial exponents must be nonnegative");
    BiPoly p;
    p.add_term({dT, du}, c);
    return p;
}

void BiPoly::add_term(const Key& k, const mpq_class& v) {
    if (v == 0) return;
    auto it = c_.find(k);
    if (it == c_.end()) {
        c_.emplace(k, v);
        return;
    }
    it->second += v;
    if (it->second == 0) c_.erase(it);
}

int BiPoly::deg_T() const {
    int d = -1;
    for (const auto& [k, v] : c_) d = std::max(d, k.first);
    return d;
}

mpq_class BiPoly::coeff(int dT, int du) const {
    auto it = c_.find({dT, du});
    return it == c_.end() ? mpq_class(0) : it->second;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    r += o;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, v] : o.c_) add_term(k, v);
    return *this;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [k, v] : o.c_) r.add_term(k, -v);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [a, x] : c_)
        for (const auto& [b, y] : o.c_) r.add_term({a.first + b.first, a.second + b.second}, x * y);
    return r;
}

std::vector<UPoly> BiPoly::coeffs_in_T() const {
    std::vector<UPoly> out(std::max(0, deg_T() + 1));
    for (const auto& [k, v] : c_) {
        auto& p = out[k.first];
        if (static_cast<int>(p.size()) <= k.second) p.resize(k.second + 1, mpq_class(0));
        p[k.second] = v;
    }
    for (auto& p : out) trim(p);
    return out;
}

BiPoly BiPoly::from_coeffs_in_T(const std::vector<UPoly>& P) {
    BiPoly r;
    for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = 0; j < P[i].size(); ++j) r.add_term({static_cast<int>(i), static_cast<int>(j)}, P[i][j]);
    return r;
}

UPoly BiPoly::substitute_u(const mpq_class& value) const {
    UPoly out(std::max(0, deg_T() + 1), mpq_class(0));
    for (const auto& [k, v] : c_) {
        mpq_class pw = 1;
        for (int i = 0; i < k.second; ++i) pw *= value;
        out[k.first] += v * pw;
    }
    trim(out);
    return out;
}

std::complex<double> BiPoly::eval(std::complex<double> T, std::complex<double> u) const {
    std::complex<double> s = 0.0;
    for (const auto& [k, v] : c_) s += v.get_d() * std::pow(T, k.first) * std::pow(u, k.second);
    return s;
}

std::string BiPoly::to_string() const {
    const auto P = coeffs_in_T();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (P[i].empty()) continue;
        if (!first) os << " + ";
        first = false;
        const std::string c = upoly_to_string(P[i], "u");
        const bool single = P[i].size() == 1 || std::count_if(P[i].begin(), P[i].end(),
                                                              [](const mpq_class& x) { return x != 0; }) == 1;
        if (i == 0) {
            os << c;
            continue;
        }
        if (single && c == "1")
            os << "";
        else if (single)
            os << c << "*";
        else
            os << "(" << c << ")*";
        os << "T";
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

// Lex leading term, T before u.
BiPoly::Key leading(const BiPoly& p) { return p.terms().rbegin()->first; }

}  // namespace

bool divide_exact(const BiPoly& a, const BiPoly& b, BiPoly& quotient) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    quotient = BiPoly();
    BiPoly r = a;
    const auto lb = leading(b);
    const mpq_class cb = b.terms().rbegin()->second;
    while (!r.is_zero()) {
        const auto lr = leading(r);
        const int dT = lr.first - lb.first, du = lr.second - lb.second;
        if (dT < 0 || du < 0) return false;
        const BiPoly m = BiPoly::monomial(r.terms().rbegin()->second / cb, dT, du);
        quotient += m;
        r = r - m * b;
    }
    return true;
}

std::complex<double> BivariateRational::eval(std::complex<double> T, std::complex<double> u) const {
    return num.eval(T, u) / den.eval(T, u);
}

bool same_rational(const BivariateRational& a, const BivariateRational& b) {
    return a.num * b.den == b.num * a.den;
}

}  // namespace arakzeta
