/*
   Copyright 2026 The lacunary authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Serial reference kernels against their OpenMP versions.

#include "lacunary/bounds.hpp"
#include "lacunary/pit.hpp"
#include "lacunary/poly.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace lacunary;

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

BinomExprPoly<Rationals> dense_instance(unsigned terms, unsigned exp)
{
    Rng rng(7);
    BinomExprPoly<Rationals> p{Rationals{}, BigRat(1), BigRat(1), BigInt(1), {}};
    for (unsigned j = 0; j < terms; ++j)
        p.terms.push_back({BigRat(static_cast<long>(rng() % 19) - 9), BigInt(rng() % exp), BigInt(rng() % exp)});
    return normalize(std::move(p));
}

// Many well separated parts, each nonzero only in its last coefficient.
BinomExprPoly<Rationals> gapped_instance(unsigned parts)
{
    BinomExprPoly<Rationals> p{Rationals{}, BigRat(2), BigRat(3), BigInt(1), {}};
    BigInt shift = 0;
    for (unsigned i = 0; i < parts; ++i) {
        for (unsigned j = 0; j < 4; ++j) p.terms.push_back({BigRat(j + 1), shift + j, BigInt(40 - j)});
        shift += BigInt(1) << 70;
    }
    return normalize(std::move(p));
}

void BM_ExpandOracle(benchmark::State& st)
{
    const auto p = dense_instance(64, 400);
    for (auto _ : st) benchmark::DoNotOptimize(expand_oracle(p, kDefaultOracleCap, mode(st)));
}
BENCHMARK(BM_ExpandOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ZeroTestParts(benchmark::State& st)
{
    const auto p = gapped_instance(64);
    PitOptions opt;
    opt.exec = mode(st);
    for (auto _ : st) benchmark::DoNotOptimize(zero_test_q(p, opt));
}
BENCHMARK(BM_ZeroTestParts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MaxValuationSearch(benchmark::State& st)
{
    SearchOptions opt;
    opt.k = 3;
    opt.exp_cap = 6;
    opt.samples = 4000;
    opt.exec = mode(st);
    for (auto _ : st) benchmark::DoNotOptimize(max_valuation_search(opt));
}
BENCHMARK(BM_MaxValuationSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
