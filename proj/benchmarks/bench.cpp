#include <benchmark/benchmark.h>

#include "osc/lattice.hpp"
#include "osc/oracle.hpp"
#include "osc/spectrum.hpp"

using namespace osc;

namespace {

StandardDescriptor pick(long r, Rat lambda_rho, const ModulusPoint& m, TypeKind k) {
  for (const auto& d : standard_list(r, PiRat(lambda_rho), m))
    if (d.type.kind == k) return d;
  throw std::logic_error("no such descriptor");
}

void BM_GaussSum(benchmark::State& st) {
  const long a = st.range(0), c = st.range(0) + 1;
  for (auto _ : st) benchmark::DoNotOptimize(gauss_sum(a, a * c % 2, c));
}
BENCHMARK(BM_GaussSum)->Arg(8)->Arg(40)->Arg(200);

void BM_FixedDimDense(benchmark::State& st) {
  StandardDescriptor d = pick(st.range(0), rat(1, 3), ModulusPoint::omega(), TypeKind::T6);
  for (auto _ : st) benchmark::DoNotOptimize(fixed_dim(gamma4_matrix(d, 4, 1)));
}
BENCHMARK(BM_FixedDimDense)->Arg(1)->Arg(2)->Arg(4);

void BM_FixedDimCycles(benchmark::State& st) {
  StandardDescriptor d{make_type(TypeKind::T1, st.range(0), 1), st.range(0), PiRat(Rat(2)), ModulusPoint::i(),
                       std::make_pair(1L, 0L)};
  for (auto _ : st) benchmark::DoNotOptimize(fixed_dim(gamma4_matrix(d, 4, 1)));
}
BENCHMARK(BM_FixedDimCycles)->Arg(4)->Arg(64);

void BM_Reduce(benchmark::State& st) {
  StandardDescriptor d = pick(3, rat(2, 3), ModulusPoint::omega(), TypeKind::T3plus);
  LatticeSpec s = to_spec(d);
  s = rewrite(s, Move::DeltaAlpha);
  s = conjugate(s, Vec2q{rat(1, 3), rat(-2, 5)});
  s = apply_shift(s, rat(1, 7));
  s = denormalise(s, Rat(2));
  for (auto _ : st) benchmark::DoNotOptimize(reduce(s));
}
BENCHMARK(BM_Reduce);

void BM_H0Window(benchmark::State& st) {
  StandardDescriptor d = pick(1, rat(1, 2), ModulusPoint::i(), TypeKind::T4);
  for (auto _ : st) benchmark::DoNotOptimize(h0_decomposition(d, WindowBounds{4, 2, Rat(st.range(0))}));
}
BENCHMARK(BM_H0Window)->Arg(100)->Arg(1000);

void BM_SmithNormalForm(benchmark::State& st) {
  IntMatrix m = IntMatrix::from_rows({{2, 0, 6, 4}, {0, 4, 2, 8}, {6, 2, 3, 0}, {4, 8, 0, 12}});
  for (auto _ : st) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm);

}  // namespace

BENCHMARK_MAIN();
