#include <benchmark/benchmark.h>

#include "spinsphere/connection.hpp"
#include "spinsphere/curvature.hpp"
#include "spinsphere/frames.hpp"
#include "spinsphere/reference_tables.hpp"
#include "spinsphere/spin_lift.hpp"
#include "spinsphere/verification.hpp"

namespace {

using namespace spinsphere;

const ScaleFactor kScale = ScaleFactor::hyperbolic_cosine(1.0);
const Point kNorth{ChartId::north_stereo, {0.3, 0.8, -1.2, 0.5}};
const Point kSouth{ChartId::south_stereo, {0.3, 0.8, -1.2, 0.5}};

void BM_Commutators(benchmark::State& state) {
  for (auto _ : state) {
    auto c = commutators(FrameId::X, kNorth, kScale);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Commutators);

void BM_FrameTransition(benchmark::State& state) {
  for (auto _ : state) {
    Mat4d m = frame_transition(FrameId::Ytilde, FrameId::X, kSouth);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_FrameTransition);

void BM_Lift(benchmark::State& state) {
  Mat4d l = frame_transition(FrameId::Ytilde, FrameId::X, kSouth);
  for (auto _ : state) {
    Mat2c s = lift(l);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Lift);

void BM_SpinorConnection(benchmark::State& state) {
  for (auto _ : state) {
    auto a = spinor_connection(FramePair::psi_x, kNorth, kScale);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_SpinorConnection);

void BM_Riemann(benchmark::State& state) {
  for (auto _ : state) {
    Rank4d r = riemann(FrameId::X, kNorth, kScale);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Riemann);

void BM_SpinorCurvature(benchmark::State& state) {
  for (auto _ : state) {
    Rank4c s = spinor_curvature(FramePair::psi_x, kNorth, kScale);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SpinorCurvature);

void BM_CompareRiemannTable(benchmark::State& state) {
  for (auto _ : state) {
    ComparisonReport rep = compare("riemann.x", kNorth, kScale, 1e-9);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_CompareRiemannTable);

void BM_FullVerification(benchmark::State& state) {
  RunConfig config;
  config.points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    VerificationReport rep = run_verification(config);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_FullVerification)->Arg(5)->Arg(25)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
