#include <benchmark/benchmark.h>

#include "mfk/catalog.hpp"

using namespace mfk;

namespace {

void BM_poly_mul_dense(benchmark::State& state) {
    int deg = static_cast<int>(state.range(0));
    VarsPtr r = make_ring({"x", "y", "z"});
    Poly a(r), b(r);
    for (int i = 0; i <= deg; ++i) {
        for (int j = 0; j + i <= deg; ++j) {
            a += Poly::monomial(GaussRat(i + j + 1), {i, j, 0}, r);
            b += Poly::monomial(GaussRat(i - j - 2), {0, j, i}, r);
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_poly_mul_dense)->Arg(4)->Arg(8)->Arg(12);

void BM_mainsub_substitution(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    DnInvariantData inv = dn_invariants(n, n / 2);
    DnSubstitution sub = dn_mainsub(inv);
    const PolyMatrix& xi = universal_flop2().xi;
    for (auto _ : state) {
        benchmark::DoNotOptimize(xi.substituted(sub.map, sub.target));
    }
}
BENCHMARK(BM_mainsub_substitution)->Arg(4)->Arg(6)->Arg(8);

void BM_poly_parse_print(benchmark::State& state) {
    const UniversalFlop2& uf = universal_flop2();
    std::string text = uf.W.text();
    for (auto _ : state) {
        benchmark::DoNotOptimize(Poly::parse(text, uf.ring).text());
    }
}
BENCHMARK(BM_poly_parse_print);

}  // namespace
