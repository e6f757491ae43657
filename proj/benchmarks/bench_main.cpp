#include <benchmark/benchmark.h>

#include <cmath>

#include "gal3/curve.hpp"
#include "gal3/fermi_walker.hpp"
#include "gal3/quadrature.hpp"
#include "gal3/transport.hpp"

namespace {

gal3::Curve cubic_curve() {
  return gal3::make_curve(gal3::sf_poly({0.0, 0.0, 1.0}), gal3::sf_poly({0.0, 0.0, 0.0, 1.0}),
                          0.0, 1.0);
}

gal3::Curve helix_curve() {
  gal3::ScalarFunction y, z;
  y.trig.push_back({-2.0 / 9.0, 0.0, 3.0});
  z.trig.push_back({0.0, -2.0 / 9.0, 3.0});
  return gal3::make_curve(y, z, 0.0, std::acos(-1.0) / 3.0);
}

void FrenetFrame(benchmark::State& state) {
  const gal3::Curve c = cubic_curve();
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-6;
    if (x > 0.99) x = 0.0;
    auto s = gal3::frenet_frame(c, x);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(FrenetFrame);

void FrenetFrameTrig(benchmark::State& state) {
  const gal3::Curve c = helix_curve();
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-6;
    if (x > 1.0) x = 0.0;
    auto s = gal3::frenet_frame(c, x);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(FrenetFrameTrig);

void FermiWalkerDefinition(benchmark::State& state) {
  const gal3::Curve c = cubic_curve();
  const gal3::FrameVectorField X =
      gal3::make_field(gal3::FrameBasis::Frenet, gal3::sf_constant(2.0),
                       gal3::sf_poly({0.0, 1.0}), gal3::sf_constant(1.0));
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-6;
    if (x > 0.99) x = 0.0;
    auto v = gal3::fw_derivative_definition(c, X, x);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(FermiWalkerDefinition);

void TransportRk4(benchmark::State& state) {
  const gal3::Curve c = cubic_curve();
  gal3::TransportState init;
  init.x = 0.0;
  init.lambda1 = 0.0;
  init.lambda2 = 1.0;
  init.lambda3 = 0.0;
  const double step = 1.0 / double(state.range(0));
  for (auto _ : state) {
    auto states =
        gal3::transport_integrate(c, gal3::FrameBasis::Frenet, nullptr, init, 1.0, step);
    benchmark::DoNotOptimize(states);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(TransportRk4)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oN);

void AdaptiveSimpson(benchmark::State& state) {
  const gal3::Curve c = cubic_curve();
  for (auto _ : state) {
    double v = gal3::adaptive_simpson([&](double t) { return gal3::torsion(c, t); }, 0.0, 1.0,
                                      1e-10);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(AdaptiveSimpson);

} // namespace

BENCHMARK_MAIN();
