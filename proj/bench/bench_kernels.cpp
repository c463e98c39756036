// SPDX-License-Identifier: Apache-2.0
// Serial vs OpenMP vs naive reference for the two heavy kernels.

#include <benchmark/benchmark.h>

#include "matwig/mwd.hpp"
#include "matwig/quantize.hpp"
#include "matwig/reference.hpp"

using namespace matwig;

namespace {

Grid grid_for(int n) { return Grid::make(1, n, std::sqrt(double(n))); }

PhaseFn gauss_symbol() {
    return [](const double* x, const double* w) { return cplx(std::exp(-pi * (x[0] * x[0] + w[0] * w[0]))); };
}

void BM_mwd(benchmark::State& st, Exec exec) {
    const Grid g = grid_for(int(st.range(0)));
    const auto A = preset::cohen(Mat::Constant(1, 1, 0.3));
    MwdOptions mo;
    mo.exec = exec;
    for (auto _ : st) benchmark::DoNotOptimize(mwd(A, hermite(2), gaussian(1), g, mo).values.data());
}

void BM_mwd_reference(benchmark::State& st) {
    const Grid g = grid_for(int(st.range(0)));
    const auto A = preset::cohen(Mat::Constant(1, 1, 0.3));
    for (auto _ : st) benchmark::DoNotOptimize(reference::mwd(A, hermite(2), gaussian(1), g).values.data());
}

void BM_kernel(benchmark::State& st, Exec exec) {
    const Grid g = grid_for(int(st.range(0)));
    const auto s = symbol_from_function(gauss_symbol(), g);
    QuantizeOptions qo;
    qo.exec = exec;
    for (auto _ : st) benchmark::DoNotOptimize(kernel_from_symbol(s, preset::tau(0.25, 1), qo).values.data());
}

void BM_kernel_reference(benchmark::State& st) {
    const Grid g = grid_for(int(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(reference::kernel_from_symbol(gauss_symbol(), preset::tau(0.25, 1), g).values.data());
}

}  // namespace

BENCHMARK_CAPTURE(BM_mwd, serial, Exec::serial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_mwd, parallel, Exec::parallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mwd_reference)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_kernel, serial, Exec::serial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_kernel, parallel, Exec::parallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel_reference)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
