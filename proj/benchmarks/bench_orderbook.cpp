#include <benchmark/benchmark.h>

#include "ticksim/order_book.hpp"
#include "ticksim/rng.hpp"

namespace {

using namespace ticksim;

// Mixed flow around the fundamental: roughly half the orders cross.
static void BM_SubmitAndMatch(benchmark::State& state) {
  const Price tick = 10;
  Rng rng(7);
  uint64_t id = 1;
  int64_t t = 0;
  LimitOrderBook book(tick, 20000, /*log_trades=*/false);
  for (auto _ : state) {
    ++t;
    book.purge_expired(t);
    const Side side = rng.uniform() < 0.5 ? Side::Buy : Side::Sell;
    const double raw = rng.normal(1.0e7, 30000.0);
    const auto px = round_to_tick(raw, side, tick);
    if (!px) continue;
    const Order order{id++, 1, side, *px, t};
    benchmark::DoNotOptimize(book.submit(order));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SubmitAndMatch);

static void BM_PurgeHeavyBook(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    LimitOrderBook book(10, 1000, false);
    Rng rng(11);
    int64_t t = 0;
    uint64_t id = 1;
    for (int i = 0; i < 5000; ++i) {
      ++t;
      const Side side = rng.uniform() < 0.5 ? Side::Buy : Side::Sell;
      const double raw = side == Side::Buy ? rng.normal(0.9e7, 10000.0)
                                           : rng.normal(1.1e7, 10000.0);
      const auto px = round_to_tick(raw, side, 10);
      if (px) book.submit(Order{id++, 1, side, *px, t});
    }
    state.ResumeTiming();
    benchmark::DoNotOptimize(book.purge_expired(t + 2000));
  }
}
BENCHMARK(BM_PurgeHeavyBook);

}  // namespace

BENCHMARK_MAIN();
