#include <benchmark/benchmark.h>

#include <mjsing/classify.hpp>
#include <mjsing/factor.hpp>
#include <mjsing/groebner.hpp>
#include <mjsing/jets.hpp>
#include <mjsing/parser.hpp>
#include <mjsing/report.hpp>

#include <string>

namespace {

mjsing::cli::InputDocument doc(const std::string& vars, const std::string& gens) {
  std::string text = "vars: " + vars + "\n";
  std::size_t start = 0;
  while (start <= gens.size()) {
    auto end = gens.find(';', start);
    if (end == std::string::npos) end = gens.size();
    text += "gen: " + gens.substr(start, end - start) + "\n";
    start = end + 1;
  }
  return mjsing::cli::parse_document(text);
}

void BM_GroebnerTwistedCubic(benchmark::State& state) {
  auto ideal = doc("x, y, z, w", "x*z - y^2; y*w - z^2; x*w - y*z").ideal();
  for (auto _ : state) benchmark::DoNotOptimize(mjsing::groebner_basis(ideal));
}
BENCHMARK(BM_GroebnerTwistedCubic);

void BM_LocalDimension(benchmark::State& state) {
  auto ideal = doc("x, y, z, w", "x^2 + y^3 - z*w; x*y - w^3").ideal();
  for (auto _ : state) benchmark::DoNotOptimize(mjsing::local_dimension(ideal));
}
BENCHMARK(BM_LocalDimension);

void BM_MilnorNumber(benchmark::State& state) {
  auto f = doc("x, y, z", "x^2 + y^3 + z^5").generators.front();
  for (auto _ : state) benchmark::DoNotOptimize(mjsing::milnor_number(f));
}
BENCHMARK(BM_MilnorNumber);

// Jet fiber dimension of the cusp as the level grows.
void BM_JetFiberDim(benchmark::State& state) {
  auto ideal = doc("x, y", "x^2 - y^3").ideal();
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mjsing::jet_fiber_dim(ideal, level));
}
BENCHMARK(BM_JetFiberDim)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_FactorCyclotomicProduct(benchmark::State& state) {
  // (t^6 - 1)(t^4 + 1)(t^2 - 2)
  auto p = mjsing::UPoly{-1, 0, 0, 0, 0, 0, 1} * mjsing::UPoly{1, 0, 0, 0, 1} * mjsing::UPoly{-2, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(mjsing::univariate_factor(p));
}
BENCHMARK(BM_FactorCyclotomicProduct);

void BM_ClassifySurface(benchmark::State& state, const char* gens) {
  auto ideal = doc("x, y, z", gens).ideal();
  for (auto _ : state) benchmark::DoNotOptimize(mjsing::classify_surface_germ(ideal));
}
BENCHMARK_CAPTURE(BM_ClassifySurface, a4, "x^2 + y^2 + z^5");
BENCHMARK_CAPTURE(BM_ClassifySurface, d5, "x^2 + y^2*z + z^4");
BENCHMARK_CAPTURE(BM_ClassifySurface, e8, "x^2 + y^3 + z^5");
BENCHMARK_CAPTURE(BM_ClassifySurface, e8_moved, "(x + y)^2 + (y + z)^3 + (z - x)^5");

void BM_AnalyzeTerminalQuotient(benchmark::State& state) {
  auto input = doc("x1, x2, x3, x4, x5, x6",
                   "x3*x4 - x5*x6; x1*x2 - x4^5; x1*x3^3 - x5^5; x2*x3^2 - x6^5");
  input.levels = 2;
  mjsing::cli::RunOptions options;
  options.timing = false;
  for (auto _ : state) benchmark::DoNotOptimize(mjsing::cli::analyze(input, options));
}
BENCHMARK(BM_AnalyzeTerminalQuotient)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
