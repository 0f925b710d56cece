// Copyright 2026 The phforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "phforge/arcmod.hpp"
#include "phforge/conversion.hpp"
#include "phforge/inner_product.hpp"
#include "phforge/modify.hpp"
#include "phforge/phcore.hpp"

using namespace phforge;

namespace {

ComplexPoly random_poly(int degree, Basis basis) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<Complex> c(degree + 1);
    for (auto& z : c) z = {u(rng), u(rng)};
    return ComplexPoly(basis, std::move(c));
}

ComplexPoly canonical() { return ComplexPoly::legendre({{2, -1}, {1, 2}, {-1, 0}}); }

void BM_Convert(benchmark::State& state) {
    const ComplexPoly p = random_poly(static_cast<int>(state.range(0)), Basis::Bernstein);
    for (auto _ : state) benchmark::DoNotOptimize(convert(p, Basis::Legendre));
}
BENCHMARK(BM_Convert)->Arg(2)->Arg(5)->Arg(10);

void BM_InnerProduct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ComplexPoly u = random_poly(n, Basis::Bernstein), v = random_poly(n, Basis::Bernstein);
    for (auto _ : state) benchmark::DoNotOptimize(inner_product(u, v));
}
BENCHMARK(BM_InnerProduct)->Arg(2)->Arg(5)->Arg(10);

void BM_BuildCurve(benchmark::State& state) {
    const ComplexPoly w = random_poly(static_cast<int>(state.range(0)), Basis::Bernstein);
    for (auto _ : state) benchmark::DoNotOptimize(build_curve(w));
}
BENCHMARK(BM_BuildCurve)->Arg(1)->Arg(2)->Arg(5);

void BM_TangentLegendre(benchmark::State& state) {
    const ComplexPoly w = ComplexPoly::bernstein({{5, 2}, {-3, -4}, {5, 1}});
    for (auto _ : state) benchmark::DoNotOptimize(tangent_preserving_legendre(w, 0.144, 0.0));
}
BENCHMARK(BM_TangentLegendre)->Unit(benchmark::kMillisecond);

void BM_QuinticFindR(benchmark::State& state) {
    const ComplexPoly w = convert(canonical(), Basis::Bernstein);
    for (auto _ : state) benchmark::DoNotOptimize(find_r_for_norm(w, 0.5));
}
BENCHMARK(BM_QuinticFindR)->Unit(benchmark::kMicrosecond);

void BM_ArcSystem(benchmark::State& state) {
    const ArcSystem sys = build_system(canonical(), 0.01, {{4, 0.0}, {5, 0.0}});
    for (auto _ : state) benchmark::DoNotOptimize(solve_arc_system(sys));
}
BENCHMARK(BM_ArcSystem)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
