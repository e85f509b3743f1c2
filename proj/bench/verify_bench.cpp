// Compares the OpenMP-parallel certificate verifier against the serial
// reference on a mid-sized instance (n = 6, 9 vertices, 45 centers).

#include <benchmark/benchmark.h>

#include <random>

#include "hcover/covering.hpp"
#include "hcover/precision.hpp"

namespace {

hcover::PolytopeV make_poly()
{
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  hcover::PolytopeV poly;
  poly.n = 6;
  poly.vertices.resize(9);
  for (auto& v : poly.vertices) {
    v.resize(6);
    for (double& c : v) c = coord(rng);
  }
  return poly;
}

void bm_verify_serial(benchmark::State& state)
{
  const hcover::PolytopeV poly = make_poly();
  const auto cert = hcover::make_certificate(poly, 6);
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto rep = hcover::verify_certificate_serial(poly, cert, samples, 1);
    benchmark::DoNotOptimize(rep);
  }
  state.SetItemsProcessed(state.iterations() * samples);
}

void bm_verify_parallel(benchmark::State& state)
{
  const hcover::PolytopeV poly = make_poly();
  const auto cert = hcover::make_certificate(poly, 6);
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto rep = hcover::verify_certificate(poly, cert, samples, 1);
    benchmark::DoNotOptimize(rep);
  }
  state.SetItemsProcessed(state.iterations() * samples);
}

}  // namespace

BENCHMARK(bm_verify_serial)->Arg(10000)->Arg(100000);
BENCHMARK(bm_verify_parallel)->Arg(10000)->Arg(100000);

int main(int argc, char** argv)
{
  hcover::init_precision();
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
