#include <benchmark/benchmark.h>

#include "vtx/arakawa.hpp"
#include "vtx/stencil.hpp"
#include "vtx/timestep.hpp"
#include "vtx/wyf.hpp"
#include "vtx/zk.hpp"

using namespace vtx;

namespace {

Field2D vortex(const Grid2D& g) { return deposit_radial(g, solve_radial(1.0), 0.0, 1.0); }

void BM_Laplacian(benchmark::State& state) {
  const Grid2D g = default_grid();
  const Field2D xi = vortex(g);
  for (auto _ : state) benchmark::DoNotOptimize(laplacian(xi));
  state.SetItemsProcessed(state.iterations() * g.nx() * g.rows());
}
BENCHMARK(BM_Laplacian);

void BM_Jacobian4(benchmark::State& state) {
  const Grid2D g = default_grid();
  const Field2D xi = vortex(g);
  const Field2D zeta = laplacian(xi);
  Jacobian4Kernel kernel(g);
  Field2D out(g);
  for (auto _ : state) {
    kernel.compute(zeta, xi, out);
    benchmark::DoNotOptimize(out.row(0));
  }
  state.SetItemsProcessed(state.iterations() * g.nx() * g.rows());
}
BENCHMARK(BM_Jacobian4);

void BM_Jacobian2(benchmark::State& state) {
  const Grid2D g = default_grid();
  const Field2D xi = vortex(g);
  const Field2D zeta = laplacian(xi);
  for (auto _ : state) benchmark::DoNotOptimize(jacobian(zeta, xi, JacobianScheme{2}));
  state.SetItemsProcessed(state.iterations() * g.nx() * g.rows());
}
BENCHMARK(BM_Jacobian2);

void BM_Rhs(benchmark::State& state) {
  const Grid2D g = default_grid();
  const Field2D xi = vortex(g);
  const int workers = static_cast<int>(state.range(0));
  RhsOperator op(g, ShearFlow{0.0, 1.2}, Model{}, RowExecutor(workers));
  Field2D out(g);
  for (auto _ : state) {
    op(xi, out);
    benchmark::DoNotOptimize(out.row(0));
  }
  state.SetItemsProcessed(state.iterations() * g.nx() * g.rows());
}
BENCHMARK(BM_Rhs)->Arg(1)->Arg(2)->Arg(4);

void BM_Rk4Step(benchmark::State& state) {
  const Grid2D g = default_grid();
  RhsOperator op(g, ShearFlow{0.0, 0.2}, Model{});
  Rk4Stepper stepper(g, [&](const Field2D& a, Field2D& b) { op(a, b); });
  SimulationState s{vortex(g), 0, 0.0};
  for (auto _ : state) stepper.step(s, 1e-4);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Rk4Step);

}  // namespace

BENCHMARK_MAIN();
