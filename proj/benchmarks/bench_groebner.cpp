#include <benchmark/benchmark.h>

#include "mfk/blowup.hpp"

using namespace mfk;

namespace {

void BM_buchberger_a_chart(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    MatFac mf = an_family(n, 1, true);
    Chart c = make_chart(mf, Side::Psi, {1}, "alpha");
    Ideal raw{c.ring, MonomialOrder::grlex(), c.raw};
    for (auto _ : state) {
        benchmark::DoNotOptimize(buchberger(raw).gens.size());
    }
}
BENCHMARK(BM_buchberger_a_chart)->Arg(2)->Arg(3)->Arg(4);

void BM_elimination_d4_chart(benchmark::State& state) {
    DnFamily fam = dn_family_full(4, 2);
    Chart c = make_chart(fam.mf, Side::Psi, {0, 1}, "a");
    verify_witnesses(c, dn_witnesses(fam, c.ring, 1));
    std::vector<Poly> gens = c.extended;
    gens.insert(gens.end(), c.raw.begin(), c.raw.end());
    Ideal ext{c.ring, MonomialOrder::grlex(), gens};
    std::vector<std::string> keep;
    for (const auto& v : *c.ring) {
        if (v != "X" && v != "Y" && v != "a11" && v != "a21") keep.push_back(v);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(elimination_ideal(ext, keep).gens.size());
    }
}
BENCHMARK(BM_elimination_d4_chart);

void BM_reduce_normal_form(benchmark::State& state) {
    VarsPtr r = make_ring({"x", "y", "z"});
    Ideal I{r, MonomialOrder::grlex(),
            {Poly::parse("x^2 - y*z", r), Poly::parse("y^2 - x*z", r),
             Poly::parse("z^2 - x*y", r)}};
    Ideal gb = buchberger(I);
    Poly p = Poly::parse("x^5*y^3 + z^7 - 2*x*y*z", r);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce(p, gb));
    }
}
BENCHMARK(BM_reduce_normal_form);

}  // namespace

BENCHMARK_MAIN();
