#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "gz/flow.hpp"
#include "gz/inverse.hpp"
#include "gz/orbit.hpp"
#include "gz/pattern.hpp"
#include "gz/polygon.hpp"
#include "gz/polytope.hpp"
#include "gz/rng.hpp"

namespace {

gz::OrbitSpec integer_spec(int n) {
  Eigen::VectorXd lambda(n);
  for (int i = 0; i < n; ++i) lambda[i] = static_cast<double>(n - i);
  return {gz::Group::Unitary, n, gz::ChamberPoint{lambda}};
}

void BM_GzMap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto A = gz::random_matrix_point(gz::Group::Unitary, n, 9);
  for (auto _ : state) {
    auto p = gz::gz_map(A);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_GzMap)->Arg(4)->Arg(8);

void BM_InverseRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = gz::sample_pattern(integer_spec(n), 11);
  const auto phases = gz::PhaseVector::random(n, 13);
  for (auto _ : state) {
    auto q = gz::gz_map(gz::inverse_gz(p, phases));
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_InverseRoundTrip)->Arg(4)->Arg(6);

void BM_Flow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto A = gz::sample_orbit(integer_spec(n), 17);
  const gz::FlowSpec f{n / 2, 1, 1.234};
  for (auto _ : state) {
    auto B = gz::gz_flow(A, f);
    benchmark::DoNotOptimize(B);
  }
}
BENCHMARK(BM_Flow)->Arg(4)->Arg(8);

void BM_ImageVertices(benchmark::State& state) {
  Eigen::VectorXd lambda(3);
  lambda << 4.0, 2.0, 0.0;
  const auto S = gz::image_polytope({gz::Group::Unitary, 3, gz::ChamberPoint{lambda}});
  for (auto _ : state) {
    auto verts = gz::vertices(S);
    benchmark::DoNotOptimize(verts);
  }
}
BENCHMARK(BM_ImageVertices);

void BM_SamplePolygon(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::VectorXd lengths = Eigen::VectorXd::Ones(n);
  const auto T = gz::TriangulationSpec::fan(n);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto P = gz::sample_polygon(lengths, T, seed++);
    benchmark::DoNotOptimize(P);
  }
}
BENCHMARK(BM_SamplePolygon)->Arg(5)->Arg(8);

void BM_Bend(benchmark::State& state) {
  const Eigen::VectorXd lengths = Eigen::VectorXd::Ones(6);
  const auto T = gz::TriangulationSpec::fan(6);
  const auto P = gz::sample_polygon(lengths, T, 23);
  for (auto _ : state) {
    auto Q = gz::bend(P, {1, 3}, 0.8);
    benchmark::DoNotOptimize(Q);
  }
}
BENCHMARK(BM_Bend);

}  // namespace

BENCHMARK_MAIN();
