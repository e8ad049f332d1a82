#include "arakzeta/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

namespace arakzeta {

namespace {

template <class T>
T tree_sum(const T* p, std::size_t n) {
    if (n <= 8) {
        T s{};
        for (std::size_t i = 0; i < n; ++i) s += p[i];
        return s;
    }
    const std::size_t h = n / 2;
    return tree_sum(p, h) + tree_sum(p + h, n - h);
}

}  // namespace

std::vector<QuadNode> gauss_legendre_panels(double a, double b, int panels) {
    using rule = boost::math::quadrature::gauss<double, 20>;
    const auto& xs = rule::abscissa();
    const auto& ws = rule::weights();
    std::vector<QuadNode> out;
    out.reserve(static_cast<std::size_t>(panels) * 20);
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        const double half = 0.5 * h;
        // boost stores the ten non-negative abscissae of the even-order rule
        for (std::size_t i = xs.size(); i-- > 0;) out.push_back({mid - half * xs[i], half * ws[i]});
        for (std::size_t i = 0; i < xs.size(); ++i) out.push_back({mid + half * xs[i], half * ws[i]});
    }
    return out;
}

double pairwise_sum(std::span<const double> v) { return tree_sum(v.data(), v.size()); }

std::complex<double> pairwise_sum(std::span<const std::complex<double>> v) {
    return tree_sum(v.data(), v.size());
}

}  // namespace arakzeta
