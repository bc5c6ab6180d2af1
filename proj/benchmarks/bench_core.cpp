#include <benchmark/benchmark.h>

#include "dol/bogoliubov.hpp"
#include "dol/spectrum.hpp"
#include "dol/verification.hpp"

using namespace dol;

static void BM_MakeLadders(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const FockRep rep(dim, StructureFunction::nonstandard_q(1.1));
  for (auto _ : state) benchmark::DoNotOptimize(make_ladders(rep));
}
BENCHMARK(BM_MakeLadders)->Arg(16)->Arg(64)->Arg(256);

static void BM_DenseMultiply(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const FockRep rep(dim, StructureFunction::nonstandard_q(1.1));
  const Ladders l = make_ladders(rep);
  for (auto _ : state) benchmark::DoNotOptimize(l.a_plus * l.a_minus);
}
BENCHMARK(BM_DenseMultiply)->Arg(16)->Arg(64)->Arg(256);

static void BM_BuildHermitian(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const FockRep rep(dim, StructureFunction::nonstandard_q(1.1));
  for (auto _ : state) benchmark::DoNotOptimize(build_h_hermitian(rep, 1.1));
}
BENCHMARK(BM_BuildHermitian)->Arg(16)->Arg(64);

static void BM_TransformedHamiltonian(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const StructureFunction phi = StructureFunction::nonstandard_q(1.1);
  const FockRep rep(dim, phi);
  const GnbtSpec spec = GnbtSpec::canonical(phi, branch_epsilon(1.1, SpectrumBranch::CaseA));
  for (auto _ : state) benchmark::DoNotOptimize(transformed_hamiltonian(rep, 1.1, spec));
}
BENCHMARK(BM_TransformedHamiltonian)->Arg(16)->Arg(64);

static void BM_SpectrumTable(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(spectrum_table(1.1, SpectrumBranch::CaseA,
                                            static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SpectrumTable)->Arg(10)->Arg(100);

static void BM_AdmissibleInterval(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(admissible_interval(SpectrumBranch::CaseA, 1e-9));
}
BENCHMARK(BM_AdmissibleInterval);

static void BM_VerificationSuite(benchmark::State& state) {
  VerifyOptions opts;
  opts.dim = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_verification(opts));
}
BENCHMARK(BM_VerificationSuite)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
