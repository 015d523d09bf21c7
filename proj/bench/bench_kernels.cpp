// Serial versus OpenMP sweeps over the law kernels.

#include <benchmark/benchmark.h>

#include <functional>

#include "support/random.hpp"
#include "ternalg/bialgebra.hpp"
#include "ternalg/kernels.hpp"
#include "ternalg/trimodule.hpp"

namespace {

using namespace ternalg;

TernaryAlgebra dense_algebra(std::size_t n) {
  randgen::Rng rng(77);
  return randgen::algebra(rng, n, 0.6);
}

TernaryBialgebra dense_bialgebra(std::size_t n) {
  randgen::Rng rng(78);
  return randgen::bialgebra(rng, n, 0.6);
}

void with_policy(benchmark::State& state, int threads, const std::function<void()>& body) {
  const kernels::ExecPolicy saved = kernels::default_policy();
  kernels::set_default_policy({threads});
  for (auto _ : state) body();
  kernels::set_default_policy(saved);
}

void BM_assoc_serial(benchmark::State& state) {
  const TernaryAlgebra A = dense_algebra(state.range(0));
  with_policy(state, 0, [&] { benchmark::DoNotOptimize(check_hom_associativity(A, Mode::Total)); });
}

void BM_assoc_parallel(benchmark::State& state) {
  const TernaryAlgebra A = dense_algebra(state.range(0));
  with_policy(state, -1, [&] { benchmark::DoNotOptimize(check_hom_associativity(A, Mode::Total)); });
}

void BM_coassoc_serial(benchmark::State& state) {
  const TernaryBialgebra B = dense_bialgebra(state.range(0));
  with_policy(state, 0, [&] { benchmark::DoNotOptimize(check_hom_coassociativity(B.coalg(), Mode::Total)); });
}

void BM_coassoc_parallel(benchmark::State& state) {
  const TernaryBialgebra B = dense_bialgebra(state.range(0));
  with_policy(state, -1, [&] { benchmark::DoNotOptimize(check_hom_coassociativity(B.coalg(), Mode::Total)); });
}

void BM_compat_identity_serial(benchmark::State& state) {
  const TernaryBialgebra B = dense_bialgebra(state.range(0));
  with_policy(state, 0, [&] { benchmark::DoNotOptimize(compatibility_identity_check(B)); });
}

void BM_compat_identity_parallel(benchmark::State& state) {
  const TernaryBialgebra B = dense_bialgebra(state.range(0));
  with_policy(state, -1, [&] { benchmark::DoNotOptimize(compatibility_identity_check(B)); });
}

void BM_trimodule_full_serial(benchmark::State& state) {
  const TernaryAlgebra A = dense_algebra(state.range(0));
  randgen::Rng rng(79);
  const TrimoduleActions act = randgen::actions(rng, A.dim(), 2, 0.6);
  with_policy(state, 0, [&] {
    benchmark::DoNotOptimize(check_trimodule(A, BihomModule::plain(2), act, Mode::Total, TrimoduleLevel::Full));
  });
}

void BM_trimodule_full_parallel(benchmark::State& state) {
  const TernaryAlgebra A = dense_algebra(state.range(0));
  randgen::Rng rng(79);
  const TrimoduleActions act = randgen::actions(rng, A.dim(), 2, 0.6);
  with_policy(state, -1, [&] {
    benchmark::DoNotOptimize(check_trimodule(A, BihomModule::plain(2), act, Mode::Total, TrimoduleLevel::Full));
  });
}

}  // namespace

BENCHMARK(BM_assoc_serial)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_assoc_parallel)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_coassoc_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_coassoc_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_compat_identity_serial)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_compat_identity_parallel)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_trimodule_full_serial)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_trimodule_full_parallel)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
