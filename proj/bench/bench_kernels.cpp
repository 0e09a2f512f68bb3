// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "univalent/extremal.hpp"
#include "univalent/geometry.hpp"
#include "univalent/kernels.hpp"

using namespace univalent;

namespace {

std::vector<double> angles(std::size_t m) {
  std::vector<double> t(m);
  for (std::size_t k = 0; k < m; ++k) t[k] = std::numbers::pi / 2 * static_cast<double>(k) / (m - 1);
  return t;
}

template <auto Kernel>
void sample(benchmark::State& state) {
  const SymmetricPolynomial p = conjectured_symmetric_coeffs(2, 50);
  const auto t = angles(static_cast<std::size_t>(state.range(0)));
  std::vector<ComplexPoint> out(t.size());
  for (auto _ : state) {
    Kernel(p, t, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void rows(benchmark::State& state) {
  const auto t = angles(static_cast<std::size_t>(state.range(0)));
  std::vector<double> out(t.size() * 11);
  for (auto _ : state) {
    Kernel(11, t, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void closest(benchmark::State& state) {
  const std::vector<Point2> poly =
      closed_polygon(trace_boundary(12, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(poly));
  state.counters["edges"] = static_cast<double>(poly.size());
}

}  // namespace

BENCHMARK(sample<kernels::serial::sample_boundary>)->Name("sample_boundary/serial")->Arg(8192)->Arg(65536);
BENCHMARK(sample<kernels::parallel::sample_boundary>)->Name("sample_boundary/parallel")->Arg(8192)->Arg(65536);
BENCHMARK(rows<kernels::serial::cosine_rows>)->Name("cosine_rows/serial")->Arg(8192)->Arg(65536);
BENCHMARK(rows<kernels::parallel::cosine_rows>)->Name("cosine_rows/parallel")->Arg(8192)->Arg(65536);
BENCHMARK(closest<kernels::serial::closest_nonadjacent_pair>)
    ->Name("closest_pair/serial")->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(closest<kernels::parallel::closest_nonadjacent_pair>)
    ->Name("closest_pair/parallel")->Arg(256)->Arg(1024)->Arg(8192)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
