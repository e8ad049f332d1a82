// Serial vs parallel kernels. Run with ARAKZETA_THREADS or OMP_NUM_THREADS to pick the pool size.

#include <benchmark/benchmark.h>

#include <cmath>
#include <map>

#include "arakzeta/arakelov.hpp"
#include "arakzeta/classspace.hpp"
#include "arakzeta/field.hpp"
#include "arakzeta/kernels.hpp"
#include "arakzeta/lattice.hpp"

using namespace arakzeta;

namespace {

const NumberFieldData& field() {
    static const NumberFieldData F = make_quadratic(5);
    return F;
}

const ClassSpaceGrid& grid(int P) {
    static std::map<int, ClassSpaceGrid> cache;
    auto it = cache.find(P);
    if (it == cache.end()) it = cache.emplace(P, build_grid(field(), P)).first;
    return it->second;
}

Exec exec_of(const benchmark::State& st) { return st.range(1) ? Exec::parallel : Exec::serial; }

void BM_build_profiles(benchmark::State& st) {
    const auto& g = grid(static_cast<int>(st.range(0)));
    for (auto _ : st) {
        auto p = st.range(1) ? build_profiles(field(), g, 1e-10, 0.05, 0.05, Exec::parallel)
                             : build_profiles_serial(field(), g, 1e-10, 0.05, 0.05);
        benchmark::DoNotOptimize(p.points.data());
    }
}

void BM_invariants_on_grid(benchmark::State& st) {
    const auto& g = grid(static_cast<int>(st.range(0)));
    for (auto _ : st) {
        auto v = invariants_on_grid(field(), g, exec_of(st));
        benchmark::DoNotOptimize(v.data());
    }
}

void BM_enumerate_vectors(benchmark::State& st) {
    const auto& F = field();
    const auto G = lattice_gram(F, add_scaling(F, zero_divisor(F), 0.02));
    const double bound = static_cast<double>(st.range(0));
    for (auto _ : st) {
        auto v = enumerate_vectors(G, bound, exec_of(st));
        benchmark::DoNotOptimize(v.data());
    }
}

void BM_node_sums(benchmark::State& st) {
    const auto prof = build_profiles(field(), grid(256), 1e-10, 0.05, 0.0);
    const auto nodes = static_cast<std::size_t>(st.range(0));
    for (auto _ : st) {
        auto out = node_sums(
            prof, nodes,
            [&](const PointProfile& p, std::size_t j) {
                const double scale = 0.05 + 0.01 * static_cast<double>(j);
                return std::complex<double>(theta_sample(p.primal, scale, p.inv.a, prof.band).minus_one);
            },
            exec_of(st));
        benchmark::DoNotOptimize(out.data());
    }
}

void BM_integrate(benchmark::State& st) {
    const auto& g = grid(static_cast<int>(st.range(0)));
    const PointFunction f = [](const ClassSpacePoint& p) {
        return std::complex<double>(std::cos(2.0 * M_PI * p.theta[0]), std::sin(p.theta[0]));
    };
    for (auto _ : st) {
        auto v = st.range(1) ? integrate(g, f, Exec::parallel) : integrate_serial(g, f);
        benchmark::DoNotOptimize(v);
    }
}

}  // namespace

BENCHMARK(BM_build_profiles)->ArgsProduct({{64, 256}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_invariants_on_grid)->ArgsProduct({{256, 2048}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_vectors)->ArgsProduct({{200, 2000}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_node_sums)->ArgsProduct({{16, 128}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_integrate)->ArgsProduct({{4096, 65536}, {0, 1}})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
