#include <benchmark/benchmark.h>

#include <vector>

#include "avoidance/classifier.hpp"
#include "avoidance/diagonals.hpp"
#include "avoidance/verifier.hpp"
#include "avoidance/witness.hpp"
#include "random_exact.hpp"

namespace {

using namespace avoidance;

std::vector<ComplexHyperplane> standard_four() {
  auto h = [](long a, long b, long c) { return ComplexHyperplane({Gaussian(a), Gaussian(b), Gaussian(c)}); };
  return {h(1, 0, 0), h(0, 1, 0), h(0, 0, 1), h(1, 1, 1)};
}

void BM_RankComplex(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  testing::ExactRng rng(7);
  std::vector<ComplexVector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(rng.gaussian_vector(n));
  const ComplexMatrix m(n, rows);
  for (auto _ : state) benchmark::DoNotOptimize(rank_complex(m));
}
BENCHMARK(BM_RankComplex)->Arg(3)->Arg(6)->Arg(12);

void BM_EnumerateDiagonals(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  testing::ExactRng rng(11);
  std::vector<ProjLine> ls;
  for (const auto& h : testing::random_gp_hyperplanes(rng, 2 * n, n + 1)) ls.emplace_back(h.coefficients());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_diagonals(ls));
}
BENCHMARK(BM_EnumerateDiagonals)->Arg(2)->Arg(3)->Arg(4);

void BM_VerifyCodimTwoWitness(benchmark::State& state) {
  const auto hs = standard_four();
  const auto w = witness_thm2ii(hs);
  Scene scene;
  for (std::size_t i = 0; i < hs.size(); ++i) scene.hyperplanes.push_back({"H" + std::to_string(i + 1), hs[i]});
  scene.real_subspaces.push_back({"H", w.h});
  SamplingPlan plan;
  plan.workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify(w.curve, scene, plan));
}
BENCHMARK(BM_VerifyCodimTwoWitness)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ClassifyDegenerate(benchmark::State& state) {
  const auto hs = standard_four();
  const RealSubspace h({RealLinearForm(RealVector{Rational(1), Rational(0), Rational(0), Rational(0),
                                                  Rational(0), Rational(0)})});
  for (auto _ : state) benchmark::DoNotOptimize(classify(hs, h));
}
BENCHMARK(BM_ClassifyDegenerate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
