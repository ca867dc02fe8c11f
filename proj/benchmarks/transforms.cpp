#include "majorana/fourier.hpp"
#include "majorana/hankel.hpp"
#include "majorana/spherical.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

using namespace majorana;

namespace {

CartesianField random_field(int n, double mass) {
  const CartesianGrid g = CartesianGrid::make(n, 10.0);
  CartesianField f = CartesianField::zeros(g, mass);
  std::mt19937 rng(1);
  std::normal_distribution<double> d(0.0, 1.0);
  for (auto& v : f.values) v = Spinor4(d(rng), d(rng), d(rng), d(rng));
  return f;
}

void BM_RotorDft(benchmark::State& state) {
  const CartesianField f = random_field(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(rotor_dft(f.grid, f.values, -1, 1.0));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.values.size()));
}
BENCHMARK(BM_RotorDft)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_FourierForward(benchmark::State& state) {
  const CartesianField f = random_field(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(forward(f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.values.size()));
}
BENCHMARK(BM_FourierForward)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_FourierInverse(benchmark::State& state) {
  const MomentumSpectrum s = forward(random_field(static_cast<int>(state.range(0)), 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(inverse(s));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.values.size()));
}
BENCHMARK(BM_FourierInverse)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

struct HankelSetup {
  HankelTransform transform;
  SphericalField field;
};

HankelSetup hankel_setup(int nr, int np) {
  const SphericalGrid grid = SphericalGrid::make(nr, 40.0, 32, 64);
  HankelTransform tr(grid, MomentumNodes::for_grid(grid, np), 5, 1.0);
  SphericalField f = SphericalField::zeros(grid, 1.0);
  const Spinor4 chi(1.0, 0.3, -0.5, 0.8);
  for (int ir = 0; ir < grid.nr; ++ir)
    for (int it = 0; it < grid.ntheta; ++it)
      for (int ip = 0; ip < grid.nphi; ++ip)
        f.values[grid.index(ir, it, ip)] = std::exp(-grid.r[ir] * grid.r[ir] / 72.0) *
                                           omega_matrix({1, 0}, grid.theta[it], grid.phi[ip]) * chi;
  return {std::move(tr), std::move(f)};
}

void BM_HankelForward(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HankelSetup s = hankel_setup(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(s.transform.forward(s.field));
}
BENCHMARK(BM_HankelForward)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_HankelInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HankelSetup s = hankel_setup(n, n);
  const HankelSpectrum spec = s.transform.forward(s.field);
  for (auto _ : state) benchmark::DoNotOptimize(s.transform.inverse(spec));
}
BENCHMARK(BM_HankelInverse)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
