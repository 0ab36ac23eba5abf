// Copyright 2026 The qfcodes Authors.
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

// Serial reference kernels against their OpenMP versions on the largest
// in-scope searches.
//
//   ./build/bench/bench_kernels --benchmark_filter=Intersection

#include <benchmark/benchmark.h>

#include "qfc/code.hpp"
#include "qfc/form_spec.hpp"
#include "qfc/kernels.hpp"

namespace {

using namespace qfc;

const code::TraceCode& sample_code() {
  static const code::TraceCode code = [] {
    const auto ctx = gf::FieldCtx::make(3, 5);
    return code::build_code(qform::form_from_spec(ctx, "tr: x^2 + x^4"), gf::PrimeElem{1});
  }();
  return code;
}

const code::TraceCode& wide_code() {
  static const code::TraceCode code = [] {
    const auto ctx = gf::FieldCtx::make(3, 6);
    return code::build_code(qform::form_from_spec(ctx, "tr: x^2"), gf::PrimeElem{1});
  }();
  return code;
}

// threads == 1 runs the serial reference.
void BM_MaxIntersection(benchmark::State& state) {
  const auto& code = sample_code();
  const auto ambient = MatrixFp::identity(code.ctx().m(), code.ctx().p());
  const kernels::IntersectionQuery q{&ambient, static_cast<int>(state.range(0)), &code.membership()};
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto r = threads == 1 ? kernels::max_intersection_serial(q)
                          : kernels::max_intersection_parallel(q, threads);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_MaxIntersection)
    ->ArgsProduct({{2, 3}, {1, 2, 4, 0}})
    ->ArgNames({"dim", "threads"})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_MinSupport(benchmark::State& state) {
  const auto& code = sample_code();
  const int r = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto res = threads == 1 ? kernels::min_support_serial(code.basis(), r)
                            : kernels::min_support_parallel(code.basis(), r, threads);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_MinSupport)
    ->ArgsProduct({{2, 3}, {1, 2, 4, 0}})
    ->ArgNames({"r", "threads"})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_WeightHistogram(benchmark::State& state) {
  const auto& code = wide_code();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto h = threads == 1 ? kernels::weight_histogram_serial(code.generator())
                          : kernels::weight_histogram_parallel(code.generator(), threads);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_WeightHistogram)->Arg(1)->Arg(2)->Arg(4)->Arg(0)->ArgName("threads")->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
