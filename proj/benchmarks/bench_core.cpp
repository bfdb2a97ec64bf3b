#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "mgpe/gpe.hpp"
#include "mgpe/quadrature.hpp"
#include "mgpe/radial_bvp.hpp"
#include "mgpe/tridiagonal.hpp"
#include "mgpe/zero_energy.hpp"

namespace {

void BM_ThomasSolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<double> sub(n, -1.0), diag(n, 4.0), super(n, -1.0), rhs(n, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(mgpe::thomas_solve(sub, diag, super, rhs));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ThomasSolve)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oN);

void BM_QuadratureEnergy(benchmark::State& state) {
    const mgpe::ZeroEnergyConfig cfg{0.1, 1.0, 0.01, 0.01};
    const mgpe::PhysicalParams units;
    for (auto _ : state) benchmark::DoNotOptimize(mgpe::delta_energy_quadrature(cfg, units));
}
BENCHMARK(BM_QuadratureEnergy);

void BM_Integrate(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(mgpe::integrate([](double x) { return std::log(x) * std::sin(x); }, 1e-6, 10.0));
}
BENCHMARK(BM_Integrate);

void BM_SolveBvp(benchmark::State& state) {
    const mgpe::ZeroEnergyConfig cfg{0.1, 1.0, 0.01, 0.01};
    for (auto _ : state) benchmark::DoNotOptimize(mgpe::solve_bvp(cfg, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SolveBvp)->Arg(101)->Arg(801)->Arg(6401);

void BM_GroundState(benchmark::State& state) {
    const auto prob = mgpe::make_gpe_problem(static_cast<double>(state.range(0)), 1.0, 100.0, 1001, std::nullopt);
    for (auto _ : state) benchmark::DoNotOptimize(mgpe::solve_ground_state(prob, 1e-8, 100000));
}
BENCHMARK(BM_GroundState)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
