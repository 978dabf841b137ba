#include <benchmark/benchmark.h>

#include <vector>

#include "mahlerzero/cli/corpus.hpp"
#include "mahlerzero/mahlerzero.hpp"

using namespace mahlerzero;

namespace {

const MahlerFunction& mahler(const char* id) { return cli::find_builtin_mahler(id)->function; }

const AlgebraicFunction& algebraic(const char* id) {
  return std::get<AlgebraicFunction>(cli::find_builtin_approximant(id)->function);
}

void BM_ExpandMahler(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_mahler(mahler("paperfolding"), n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExpandMahler)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_ExpandBranch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_branch(algebraic("cubic0"), n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExpandBranch)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

// res_y of the sum-annihilator inputs for sqrt(1+z) + twisted sqrt(1+z),
// once by Bareiss over Q[z][x] and once by the modular route.
struct SumInputs {
  std::vector<BiPoly> f, g;
};

SumInputs sum_inputs(std::size_t twist_index) {
  const BiPoly pf = parse_poly("y^3 - y - z");
  const BiPoly pg = twist(pf, parse_univariate("1 + z"), 2, twist_index);
  SumInputs in;
  for (const auto& c : pf.y_coeffs()) in.f.emplace_back(c);
  // P_g(z, x - y): expand with x as the outer variable of each coefficient.
  const auto dg = static_cast<std::size_t>(pg.deg_y());
  std::vector<std::vector<Poly>> shifted(dg + 1, std::vector<Poly>(dg + 1));
  for (std::size_t j = 0; j <= dg; ++j) {
    Integer binom = 1;
    for (std::size_t t = 0; t <= j; ++t) {
      if (t > 0) {
        binom *= static_cast<unsigned long>(j - t + 1);
        binom /= static_cast<unsigned long>(t);
      }
      Rational c(binom);
      if (t % 2 == 1) c = -c;
      shifted[t][j - t] += pg.coeff(j) * c;
    }
  }
  for (auto& row : shifted) in.g.emplace_back(std::move(row));
  return in;
}

void BM_ResultantBareiss(benchmark::State& state) {
  const SumInputs in = sum_inputs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(resultant_y<BiPoly>(in.f, in.g));
}
BENCHMARK(BM_ResultantBareiss)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ResultantModular(benchmark::State& state) {
  const SumInputs in = sum_inputs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(resultant_y_modular(in.f, in.g));
}
BENCHMARK(BM_ResultantModular)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_CertifiedNu(benchmark::State& state) {
  const Approximant g = algebraic("cubic0");
  for (auto _ : state) benchmark::DoNotOptimize(certified_nu(mahler("paperfolding"), g));
}
BENCHMARK(BM_CertifiedNu)->Unit(benchmark::kMillisecond);

void BM_MgAnnihilator(benchmark::State& state) {
  const char* ids[] = {"sqrt1pz", "cubic0"};
  const AlgebraicFunction& g = algebraic(ids[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(mg_annihilator(mahler("sigma2n"), g));
}
BENCHMARK(BM_MgAnnihilator)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_Corpus(benchmark::State& state) {
  const auto cases = cli::builtin_corpus();
  for (auto _ : state) benchmark::DoNotOptimize(cli::run_corpus(cases, 1));
}
BENCHMARK(BM_Corpus)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
