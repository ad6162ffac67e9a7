#include <benchmark/benchmark.h>

#include "liestruct/cohomology.hpp"
#include "liestruct/solvers.hpp"

#include <random>

using namespace liestruct;

namespace {

template <class F>
Mat<F> random_matrix(const F& f, int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    Mat<F> m(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.a[i][j] = f.from_long(dist(rng));
    return m;
}

void bm_rref_rationals(benchmark::State& state) {
    QField q;
    auto m = random_matrix(q, static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        auto copy = m;
        benchmark::DoNotOptimize(rref_in_place(copy));
    }
}

void bm_rref_prime_field(benchmark::State& state) {
    FpField f{1000003};
    auto m = random_matrix(f, static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        auto copy = m;
        benchmark::DoNotOptimize(rref_in_place(copy));
    }
}

void bm_streaming_nullspace(benchmark::State& state) {
    FpField f{101};
    const int unknowns = static_cast<int>(state.range(0));
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> col(0, unknowns - 1), val(1, 100);
    std::vector<std::map<int, FpField::Elem>> rows(2 * unknowns);
    for (auto& r : rows)
        for (int t = 0; t < 6; ++t) r[col(rng)] = f.from_long(val(rng));
    for (auto _ : state) {
        StreamingSolver<FpField> solver(f, unknowns);
        for (const auto& r : rows) solver.add_row(r);
        benchmark::DoNotOptimize(solver.rank());
    }
}

void bm_poisson_sl3(benchmark::State& state) {
    QField q;
    auto sl3 = sl_n(q, 3);
    for (auto _ : state) {
        auto rep = poisson_space(sl3);
        benchmark::DoNotOptimize(rep.space.dim());
    }
}

void bm_poisson_current_f101(benchmark::State& state) {
    FpField f{101};
    auto L = current_algebra(sl_n(f, 3), dual_numbers(f));
    for (auto _ : state) {
        auto rep = poisson_space(L);
        benchmark::DoNotOptimize(rep.space.dim());
    }
}

void bm_jacobi_bi_zassenhaus(benchmark::State& state) {
    FpField f2{2};
    auto W = bi_zassenhaus(f2, static_cast<int>(state.range(0)), 1);
    for (auto _ : state) {
        auto rep = check_identity(W, Identity::Jacobi);
        benchmark::DoNotOptimize(rep.holds);
    }
}

void bm_coboundary_degree2(benchmark::State& state) {
    QField q;
    auto M = adjoint_module(current_algebra(sl_n(q, 2), dual_numbers(q)));
    for (auto _ : state) {
        auto d = ce_coboundary(M, 2);
        benchmark::DoNotOptimize(d.rows);
    }
}

void bm_centroid_kac_moody(benchmark::State& state) {
    FpField f7{7};
    auto KM = kac_moody_mod_p(f7);
    for (auto _ : state) {
        auto rep = centroid(KM, true);
        benchmark::DoNotOptimize(rep.space.dim());
    }
}

}  // namespace

BENCHMARK(bm_rref_rationals)->Arg(32)->Arg(64);
BENCHMARK(bm_rref_prime_field)->Arg(64)->Arg(128);
BENCHMARK(bm_streaming_nullspace)->Arg(256)->Arg(1024);
BENCHMARK(bm_poisson_sl3);
BENCHMARK(bm_poisson_current_f101);
BENCHMARK(bm_jacobi_bi_zassenhaus)->Arg(2)->Arg(3);
BENCHMARK(bm_coboundary_degree2);
BENCHMARK(bm_centroid_kac_moody);

BENCHMARK_MAIN();
