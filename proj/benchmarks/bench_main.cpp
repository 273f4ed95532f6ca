#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "npbeam/analysis.hpp"
#include "npbeam/core_field.hpp"
#include "npbeam/riccati.hpp"
#include "npbeam/verification.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

void BM_EvalField(benchmark::State& state) {
    const npbeam::BeamSpec beam{1.0, 1.0};
    double R = 0.1;
    for (auto _ : state) {
        const auto s = npbeam::eval_field(beam, {R, kPi / 3, 0.0});
        benchmark::DoNotOptimize(s.value);
        R = R < 20.0 ? R + 1e-3 : 0.1;
    }
}
BENCHMARK(BM_EvalField);

void BM_EnvelopeExponent(benchmark::State& state) {
    const npbeam::BeamSpec beam{1.0, 1.0};
    for (auto _ : state) {
        const auto f =
            npbeam::eval_envelope_exponent(beam, {0.5, kPi / 3, 0.0}, npbeam::Branch::Cos);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_EnvelopeExponent);

void BM_HelmholtzResidual(benchmark::State& state) {
    const npbeam::BeamSpec beam{1.0, 1.0};
    for (auto _ : state) {
        const auto rep = npbeam::helmholtz_residual(beam, {0.5, kPi / 3, 0.0}, 1e-3);
        benchmark::DoNotOptimize(rep.relative_magnitude);
    }
}
BENCHMARK(BM_HelmholtzResidual);

void BM_RadialIntegration(benchmark::State& state) {
    const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    const auto rhs = [](double R, npbeam::Complex y) {
        return npbeam::radial_rhs(R, y, {0.0, 0.0}, 1.0);
    };
    const npbeam::Complex y0 = npbeam::radial_closed_y1(0.2, 1.0, npbeam::Branch::Cos);
    for (auto _ : state) {
        const auto sol = npbeam::integrate_complex_ode(rhs, 0.2, y0, 0.7, tol);
        benchmark::DoNotOptimize(sol.nodes.back().second);
    }
}
BENCHMARK(BM_RadialIntegration)->Arg(6)->Arg(8)->Arg(10);

void BM_ShellEnergy(benchmark::State& state) {
    const npbeam::BeamSpec beam{1.0, 1.0};
    const auto w = npbeam::admissible_theta_window();
    const int panels = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto rep =
            npbeam::shell_energy(beam, 1.0, 10.0, w.theta0, w.theta1, panels, 16);
        benchmark::DoNotOptimize(rep.value);
    }
}
BENCHMARK(BM_ShellEnergy)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
