// Serial against OpenMP timings for the heavy kernels. The second benchmark
// argument selects the path: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include <random>

#include "yoklab/labels.hpp"
#include "yoklab/modrep.hpp"
#include "yoklab/structure.hpp"

using namespace yoklab;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

const YAlgebra<CyclotomicField>& y23() {
  static const CyclotomicField f(2);
  static const YAlgebra<CyclotomicField> y(f, 3, f.zero());
  return y;
}

const YAlgebra<CyclotomicField>& y33() {
  static const CyclotomicField f(3);
  static const YAlgebra<CyclotomicField> y(f, 3, f.zero());
  return y;
}

void BM_Gram23(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(y23(), TraceForm::IdentityCoefficient, exec_of(state)));
}

void BM_GramRank23(benchmark::State& state) {
  const auto g = gram_matrix(y23(), TraceForm::IdentityCoefficient);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_rank(y23().field(), g, exec_of(state)));
}

void BM_CommutatorIdeal33(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(commutator_ideal(y33(), exec_of(state)).dimension());
}

void BM_IdealPowers33(benchmark::State& state) {
  const auto ideal = commutator_ideal(y33());
  for (auto _ : state) benchmark::DoNotOptimize(radical_report(y33(), ideal, exec_of(state)).power_dims);
}

void BM_CellReports33(benchmark::State& state) {
  const auto predicted = predicted_cells(y33().index(), enumerate_labels(3, 3));
  for (auto _ : state)
    benchmark::DoNotOptimize(cell_reports(YCells<CyclotomicField>{y33()}, predicted, exec_of(state)).size());
}

void BM_DenseRankFp(benchmark::State& state) {
  const PrimeField f(13, 3);
  const std::size_t n = 160;
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> coeff(0, 12);
  DenseMatrix<Residue> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = f.from_int(coeff(rng));
  for (auto _ : state) benchmark::DoNotOptimize(matrix_rank(f, m, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_Gram23)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramRank23)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CommutatorIdeal33)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdealPowers33)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CellReports33)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DenseRankFp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
