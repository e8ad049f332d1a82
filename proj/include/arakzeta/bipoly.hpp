#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace arakzeta {

using UPoly = std::vector<mpq_class>;  // coefficient i of x^i; no trailing zeros

void trim(UPoly& p);
std::string upoly_to_string(const UPoly& p, const std::string& var);

// Exact polynomial in (T, u) with rational coefficients.
class BiPoly {
public:
    using Key = std::pair<int, int>;  // (degree in T, degree in u)

    BiPoly() = default;
    static BiPoly constant(const mpq_class& c);
    static BiPoly monomial(const mpq_class& c, int dT, int du);

    const std::map<Key, mpq_class>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int deg_T() const;
    mpq_class coeff(int dT, int du) const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly& operator+=(const BiPoly& o);
    bool operator==(const BiPoly& o) const { return c_ == o.c_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    // Coefficient polynomials in u of T^0 .. T^{deg_T}.
    std::vector<UPoly> coeffs_in_T() const;
    static BiPoly from_coeffs_in_T(const std::vector<UPoly>& P);

    // u := value, giving a polynomial in T.
    UPoly substitute_u(const mpq_class& value) const;
    std::complex<double> eval(std::complex<double> T, std::complex<double> u) const;
    std::string to_string() const;

private:
    void add_term(const Key& k, const mpq_class& v);
    std::map<Key, mpq_class> c_;
};

// Exact division under lex order with T > u. Returns false when b does not
// divide a.
bool divide_exact(const BiPoly& a, const BiPoly& b, BiPoly& quotient);

struct BivariateRational {
    BiPoly num;
    BiPoly den;

    std::complex<double> eval(std::complex<double> T, std::complex<double> u) const;
};

// Exact equality by cross-multiplication.
bool same_rational(const BivariateRational& a, const BivariateRational& b);

}  // namespace arakzeta
