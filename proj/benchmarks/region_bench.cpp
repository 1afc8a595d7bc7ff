#include <benchmark/benchmark.h>

#include "wiretap/binary.hpp"
#include "wiretap/channel.hpp"
#include "wiretap/classify.hpp"
#include "wiretap/oracle.hpp"
#include "wiretap/region.hpp"

namespace {

const wiretap::WiretapChannel& mixed_pair() {
  static const wiretap::WiretapChannel w = wiretap::make_bsc_bec(0.1, 0.6);
  return w;
}

void BM_capacity(benchmark::State& state) {
  const wiretap::ChannelMatrix ch = wiretap::make_bec(0.37);
  for (auto _ : state) benchmark::DoNotOptimize(wiretap::capacity(ch));
}
BENCHMARK(BM_capacity);

void BM_advantage_eval(benchmark::State& state) {
  const wiretap::WiretapChannel& w = mixed_pair();
  const wiretap::Pmf px = wiretap::Pmf::binary(0.37);
  for (auto _ : state) benchmark::DoNotOptimize(wiretap::f_mu(w, px, 0.5));
}
BENCHMARK(BM_advantage_eval);

void BM_extremum_scan(benchmark::State& state) {
  const wiretap::WiretapChannel& w = mixed_pair();
  for (auto _ : state) benchmark::DoNotOptimize(wiretap::minimize_f(w, 0.1));
}
BENCHMARK(BM_extremum_scan);

void BM_best_config(benchmark::State& state) {
  const wiretap::WiretapChannel& w = mixed_pair();
  for (auto _ : state) benchmark::DoNotOptimize(wiretap::best_config(w, 0.1));
}
BENCHMARK(BM_best_config);

void BM_auxiliary_problem(benchmark::State& state) {
  const wiretap::WiretapChannel& w = mixed_pair();
  wiretap::SolverOptions opts;
  opts.starts = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(wiretap::auxiliary_problem(w, 0.1, opts));
}
BENCHMARK(BM_auxiliary_problem)->Arg(8)->Arg(32);

void BM_brute_binary(benchmark::State& state) {
  const wiretap::WiretapChannel& w = mixed_pair();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        wiretap::brute_binary(w, 0.0, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_brute_binary)->Arg(50)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
