#include <benchmark/benchmark.h>

#include "eulermat/catalog.hpp"
#include "eulermat/identity_suite.hpp"
#include "eulermat/sequences.hpp"

using namespace eulermat;
using namespace eulermat::catalog;

namespace {

void BM_EulerPolyTableFormal(benchmark::State& state) {
    unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto t = seq::euler_poly_table(n);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_EulerPolyTableFormal)->Arg(8)->Arg(16)->Arg(24);

void BM_BuildGenEulerSymbolic(benchmark::State& state) {
    unsigned n = static_cast<unsigned>(state.range(0));
    MatrixSpec spec{MatrixKind::GenEuler, n, Param::sym(), {}, Param::sym()};
    for (auto _ : state) {
        Mat m = build(spec);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_BuildGenEulerSymbolic)->Arg(8)->Arg(16);

void BM_MatMulSymbolic(benchmark::State& state) {
    unsigned n = static_cast<unsigned>(state.range(0));
    Mat p = build({MatrixKind::Pascal, n, Param::sym()});
    Mat e = build({MatrixKind::EulerPoly, n, Param::sym()});
    for (auto _ : state) {
        Mat m = p * e;
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_MatMulSymbolic)->Arg(8)->Arg(16)->Arg(24);

void BM_InverseUnitLower(benchmark::State& state) {
    unsigned n = static_cast<unsigned>(state.range(0));
    Mat e = build({MatrixKind::EulerPoly, n, Param::sym()});
    for (auto _ : state) {
        Mat inv = e.inverse_unit_lower();
        benchmark::DoNotOptimize(inv);
    }
}
BENCHMARK(BM_InverseUnitLower)->Arg(8)->Arg(16);

void BM_FullSuite(benchmark::State& state) {
    suite::CheckParams p;
    p.n = static_cast<unsigned>(state.range(0));
    p.trials = 1;
    for (auto _ : state) {
        auto results = suite::run_suite(p);
        benchmark::DoNotOptimize(results);
    }
}
BENCHMARK(BM_FullSuite)->Arg(4)->Arg(8);

void BM_SingleCheckSymbolic(benchmark::State& state) {
    suite::CheckParams p;
    p.n = static_cast<unsigned>(state.range(0));
    p.symbolic_alpha = true;
    p.symbolic_x = true;
    for (auto _ : state) {
        auto r = suite::run_check(suite::CheckId::PascalTranslationFamily, p);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_SingleCheckSymbolic)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
