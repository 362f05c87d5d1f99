#include <benchmark/benchmark.h>

#include "gkz/bundled.hpp"
#include "gkz/continuation.hpp"

using namespace gkz;

namespace {

void BM_quotient_basis(benchmark::State& state) {
  auto a2 = bundled_a2();
  auto T = bundled_triangulation(a2, "fine");
  for (auto _ : state) benchmark::DoNotOptimize(quotient_basis(T).dim);
}
BENCHMARK(BM_quotient_basis);

void BM_mbeta_interior(benchmark::State& state) {
  auto a2 = bundled_a2();
  auto T = bundled_triangulation(a2, "fine");
  IVec beta = ivec({-4, -6});
  for (auto _ : state) benchmark::DoNotOptimize(mbeta_quotient(T, beta).total_dim);
}
BENCHMARK(BM_mbeta_interior);

void BM_build_kring(benchmark::State& state) {
  auto a1 = bundled_a1();
  auto T = bundled_triangulation(a1, "coarse");
  for (auto _ : state) benchmark::DoNotOptimize(build_kring(T).total_dim);
}
BENCHMARK(BM_build_kring);

void BM_evaluate_xi(benchmark::State& state) {
  auto a1 = bundled_a1();
  auto T = bundled_triangulation(a1, "fine");
  auto K = build_kring(T);
  auto ch = choose_gamma(T, ivec({0, 0}));
  auto Sc = build_series_cones(T);
  auto U = build_domain(*T.config, Sc.total, 1);
  ZPoint z;
  z.mlog = lift_to_ambient(*T.config, U.offset);
  QVec g = interior_point(RationalCone::from_generators(Sc.nL, Sc.total));
  QVec amb = embed_from_L(*T.config, g);
  for (size_t j = 0; j < z.mlog.size(); ++j) z.mlog[j] += amb[j];
  z.arg_pi.assign(3, rat(-1, 4));
  Int bound = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_Xi(T, K, ch, z, bound, &U).tail);
}
BENCHMARK(BM_evaluate_xi)->Arg(8)->Arg(12)->Arg(16);

void BM_flip_context(benchmark::State& state) {
  auto a1 = bundled_a1();
  auto Tp = bundled_triangulation(a1, "fine");
  auto Tm = bundled_triangulation(a1, "coarse");
  for (auto _ : state) benchmark::DoNotOptimize(build_flip_context(Tp, Tm).order);
}
BENCHMARK(BM_flip_context);

void BM_mb_continue(benchmark::State& state) {
  auto a1 = bundled_a1();
  auto Tp = bundled_triangulation(a1, "fine");
  auto Tm = bundled_triangulation(a1, "coarse");
  auto ctx = build_flip_context(Tp, Tm);
  auto Kp = build_kring(Tp);
  auto choice = choose_gamma(Tp, ivec({0, 0}));
  auto z = build_path(Tp, Tm, ctx.circuit).z_minus;
  ContourPolicy policy;
  policy.nodes = (int)state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(mb_continue(ctx, Kp, choice, z, policy).total.norm());
}
BENCHMARK(BM_mb_continue)->Arg(32)->Arg(64)->Arg(128);

void BM_fm_oracle(benchmark::State& state) {
  auto con = bundled_conifold();
  auto Tp = bundled_triangulation(con, "plus");
  auto Tm = bundled_triangulation(con, "minus");
  auto ctx = build_flip_context(Tp, Tm);
  auto Kp = build_kring(Tp);
  auto Khat = build_kring(ctx.hat.fan);
  ContourPolicy policy;
  IVec m = ivec({1, 2, 0, 1});
  for (auto _ : state)
    benchmark::DoNotOptimize(fm_oracle(ctx, Kp, Khat, m, policy).norm());
}
BENCHMARK(BM_fm_oracle);

}  // namespace

BENCHMARK_MAIN();
