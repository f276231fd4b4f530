#include <benchmark/benchmark.h>

#include "lbiso/opmatrix.hpp"
#include "lbiso/rmatrix.hpp"

using namespace lbiso;

namespace {

RMatrix dense(int n) {
  RMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rational((i * 7 + j * 3) % 11 - 5, 1 + (i + j) % 4);
  for (int i = 0; i < n; ++i) m.at(i, i) += Rational(n);
  return m;
}

void bm_rmatrix_inverse(benchmark::State& state) {
  RMatrix m = dense(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    RMatrix inv = m.inverse();
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(bm_rmatrix_inverse)->Arg(9)->Arg(19)->Arg(27);

void bm_opmatrix_product(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  OpMatrix a(n, n, 3, 1), b(n, n, 3, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int axis = 0; axis < 3; ++axis) {
        Exp e{0, 0, 0, 0};
        e[axis] = 1;
        a.at(i, j).add_term(e, Rational((i + j + axis) % 5 - 2));
        b.at(i, j).add_term(e, Rational((i * j + axis) % 7 - 3));
      }
  for (auto _ : state) {
    OpMatrix c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(bm_opmatrix_product)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
