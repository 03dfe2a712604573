#include <benchmark/benchmark.h>

#include "mfk/matfac.hpp"
#include "mfk/catalog.hpp"

using namespace mfk;

namespace {

void BM_verify_dn_family(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    MatFac mf = dn_family(n, n / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_factorization(mf).pass());
    }
}
BENCHMARK(BM_verify_dn_family)->Arg(4)->Arg(6)->Arg(8);

void BM_determinant_4x4(benchmark::State& state) {
    DnFamily fam = dn_family_full(static_cast<int>(state.range(0)), 1);
    PolyMatrix b0 = dn_b0(fam);
    for (auto _ : state) {
        benchmark::DoNotOptimize(b0.determinant());
    }
}
BENCHMARK(BM_determinant_4x4)->Arg(4)->Arg(8);

void BM_adjugate_inverse(benchmark::State& state) {
    DnFamily fam = dn_family_full(6, 1);
    PolyMatrix b0 = dn_b0(fam);
    for (auto _ : state) {
        benchmark::DoNotOptimize(b0.adjugate_inverse());
    }
}
BENCHMARK(BM_adjugate_inverse);

void BM_decompose_k1(benchmark::State& state) {
    DnFamily fam = dn_family_full(static_cast<int>(state.range(0)), 1);
    PolyMatrix b0 = dn_b0(fam), b1 = dn_b1(fam);
    Partition part{{0}, {1}, {2, 3}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(fam.mf, b0, b1, part).size());
    }
}
BENCHMARK(BM_decompose_k1)->Arg(4)->Arg(8);

}  // namespace
