// Microbenchmarks for the hot paths: transforms, one range step in both
// marching modes, propagator synthesis, and the finite-difference baseline
// step. Sized to mirror the deep-water scenario where performance matters.

#include <benchmark/benchmark.h>

#include <complex>
#include <random>

#include <chebpe/chebyshev.hpp>
#include <chebpe/environment.hpp>
#include <chebpe/oracle.hpp>
#include <chebpe/pade.hpp>
#include <chebpe/solver.hpp>
#include <chebpe/starter.hpp>

namespace {

using namespace chebpe;

Environment deep_env() {
  Environment env;
  env.depth = 5000.0;
  env.freq = 50.0;
  env.source_depth = 1000.0;
  env.receiver_depth = 1000.0;
  env.ref_speed = 1500.0;
  env.ssp = SoundSpeedProfile::munk();
  env.density = DensityProfile::constant(1.0);
  return env;
}

SpectrumVector random_spectrum(int order) {
  std::mt19937 rng(11u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  SpectrumVector out(order + 1);
  for (int k = 0; k <= order; ++k) out[k] = Complex(dist(rng), dist(rng));
  return out;
}

void BM_ForwardTransform(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const CglGrid grid = cgl_points(N);
  const Eigen::VectorXcd values = backward_transform(random_spectrum(N), grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(forward_transform(values));
  }
}
BENCHMARK(BM_ForwardTransform)->Arg(64)->Arg(256)->Arg(600);

void BM_AssembleDepthOperator(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const Environment env = deep_env();
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_depth_operator(env, N));
  }
}
BENCHMARK(BM_AssembleDepthOperator)->Arg(128)->Arg(600);

void BM_StepSplit(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const Environment env = deep_env();
  const DepthOperator op = assemble_depth_operator(env, N);
  const PadeSeries series = compute_pade_series(env.k0(), 20.0, 4);
  const SteppedSystem system(op, series);
  SpectrumVector phat = gaussian_starter(env, cgl_points(N), 3.0);
  for (auto _ : state) {
    phat = system.step_split(phat);
    benchmark::DoNotOptimize(phat);
  }
}
BENCHMARK(BM_StepSplit)->Arg(128)->Arg(600);

void BM_StepTransfer(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const Environment env = deep_env();
  const DepthOperator op = assemble_depth_operator(env, N);
  const PadeSeries series = compute_pade_series(env.k0(), 20.0, 4);
  const SteppedSystem system(op, series);
  const Eigen::MatrixXcd T = system.transfer_matrix();
  SpectrumVector phat = gaussian_starter(env, cgl_points(N), 3.0);
  for (auto _ : state) {
    phat = series.phase * (T * phat).eval();
    benchmark::DoNotOptimize(phat);
  }
}
BENCHMARK(BM_StepTransfer)->Arg(128)->Arg(600);

void BM_TransferBuild(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const Environment env = deep_env();
  const DepthOperator op = assemble_depth_operator(env, N);
  const PadeSeries series = compute_pade_series(env.k0(), 20.0, 4);
  const SteppedSystem system(op, series);
  for (auto _ : state) {
    benchmark::DoNotOptimize(system.transfer_matrix());
  }
}
BENCHMARK(BM_TransferBuild)->Arg(128)->Arg(256);

void BM_PadeSynthesis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_pade_series(0.2094, 20.0, n));
  }
}
BENCHMARK(BM_PadeSynthesis)->Arg(2)->Arg(8);

void BM_FdmStep(benchmark::State& state) {
  const int nf = static_cast<int>(state.range(0));
  Environment env = deep_env();
  const PadeSeries series = compute_pade_series(env.k0(), 20.0, 4);
  const FdmSystem system = build_fdm_system(env, nf, series);
  StarterSpec spec;
  spec.kind = StarterSpec::Kind::Gaussian;
  spec.width_scale = 3.0;
  Eigen::VectorXcd values = starter_values(spec, env, system.depths, 20.0);
  for (auto _ : state) {
    values = fdm_step(system, values);
    benchmark::DoNotOptimize(values);
  }
}
BENCHMARK(BM_FdmStep)->Arg(1000)->Arg(5000);

}  // namespace

BENCHMARK_MAIN();
