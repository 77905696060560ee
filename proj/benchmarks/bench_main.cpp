#include <benchmark/benchmark.h>

#include <numbers>

#include "gnch/elliptic.hpp"
#include "gnch/gn_model.hpp"
#include "gnch/integrator.hpp"
#include "gnch/profiles.hpp"

using namespace gnch;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

struct Setup {
    Grid g{256, two_pi};
    RegimeParams p;
    ModelConstants c;
    Field zeta, u;
    State U;

    Setup() {
        p.mu = 0.1;
        p.eps = 0.1;
        p.gamma = 0.3;
        p.delta = 0.9;
        c = derive_constants(p);
        zeta = random_smooth_field(g, 7, 8, 0.5);
        u = random_smooth_field(g, 8, 10, 1.0);
        U.zeta = zeta;
        U.v = scaled(u, 0.4);
    }
};

Setup& setup() {
    static Setup s;
    return s;
}

void bm_spectral_derivative(benchmark::State& state) {
    Setup& s = setup();
    for (auto _ : state) benchmark::DoNotOptimize(s.g.ddx(s.u));
}
BENCHMARK(bm_spectral_derivative);

void bm_bessel_potential(benchmark::State& state) {
    Setup& s = setup();
    for (auto _ : state) benchmark::DoNotOptimize(s.g.lambda_s(s.u, 2.0));
}
BENCHMARK(bm_bessel_potential);

void bm_apply_T(benchmark::State& state) {
    Setup& s = setup();
    const TContext ctx = make_t_context(s.g, s.c, s.p.mu, s.p.eps, s.zeta);
    for (auto _ : state) benchmark::DoNotOptimize(apply_T(ctx, s.u));
}
BENCHMARK(bm_apply_T);

void bm_invert_T(benchmark::State& state) {
    Setup& s = setup();
    const TContext ctx = make_t_context(s.g, s.c, s.p.mu, s.p.eps, s.zeta);
    const Field f = apply_T(ctx, s.u);
    SolveStats stats;
    for (auto _ : state) benchmark::DoNotOptimize(invert_T(ctx, f, 1e-11, 500, &stats));
}
BENCHMARK(bm_invert_T);

void bm_gn_rhs(benchmark::State& state) {
    Setup& s = setup();
    for (auto _ : state) benchmark::DoNotOptimize(gn_rhs(s.g, s.U, s.p, s.c));
}
BENCHMARK(bm_gn_rhs);

void bm_rk4_step(benchmark::State& state) {
    Setup& s = setup();
    const GNRhs rhs = [&](const State& U) { return gn_rhs(s.g, U, s.p, s.c); };
    for (auto _ : state) benchmark::DoNotOptimize(rk4_step(s.U, 1e-3, rhs));
}
BENCHMARK(bm_rk4_step);

}  // namespace

BENCHMARK_MAIN();
