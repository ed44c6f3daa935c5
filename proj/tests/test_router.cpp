#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ticksim/router.hpp"
#include "ticksim/rng.hpp"

using namespace ticksim;

TEST_CASE("window counts trades per market") {
  VolumeWindow window(10000, 0.9);
  window.record_trade(Market::A, 5);
  window.record_trade(Market::A, 6);
  window.record_trade(Market::A, 6);
  window.record_trade(Market::B, 7);
  CHECK(window.volume(Market::A) == 3);
  CHECK(window.volume(Market::B) == 1);
}

TEST_CASE("window evicts trades older than the span") {
  const int64_t span = 10000;
  VolumeWindow window(span, 0.9);
  window.record_trade(Market::A, 0);
  window.advance_to(span - 1);
  CHECK(window.volume(Market::A) == 1);
  window.advance_to(span + 1);
  CHECK(window.volume(Market::A) == 0);
}

TEST_CASE("empty window reports zero volume") {
  VolumeWindow window(100, 0.9);
  window.advance_to(5000);
  CHECK(window.volume(Market::A) == 0);
  CHECK(window.volume(Market::B) == 0);
}

TEST_CASE("share falls back to the last known value") {
  VolumeWindow window(10000, 0.9);
  SUBCASE("before any trade") { CHECK(window.share_a() == 0.9); }
  SUBCASE("ratio of recorded trades") {
    for (int i = 0; i < 900; ++i) window.record_trade(Market::A, 10);
    for (int i = 0; i < 100; ++i) window.record_trade(Market::B, 10);
    CHECK(window.share_a() == doctest::Approx(0.9));
  }
  SUBCASE("one-sided window") {
    for (int i = 0; i < 50; ++i) window.record_trade(Market::B, 10);
    CHECK(window.share_a() == 0.0);
    // after eviction the last computed value is retained
    window.advance_to(20010);
    CHECK(window.volume(Market::B) == 0);
    CHECK(window.share_a() == 0.0);
  }
}

TEST_CASE("window share matches a brute-force recount of the trade log") {
  const int64_t span = 500;
  VolumeWindow window(span, 0.9);
  Rng rng(444);
  std::vector<std::pair<int64_t, Market>> log;
  for (int64_t t = 1; t <= 10000; ++t) {
    window.advance_to(t);
    while (rng.uniform() < 0.3) {
      const Market market = rng.uniform() < 0.6 ? Market::A : Market::B;
      window.record_trade(market, t);
      log.emplace_back(t, market);
    }
    int64_t want_a = 0, want_b = 0;
    for (const auto& [s, market] : log) {
      if (s > t - span && s <= t) {
        (market == Market::A ? want_a : want_b) += 1;
      }
    }
    REQUIRE(window.volume(Market::A) == want_a);
    REQUIRE(window.volume(Market::B) == want_b);
  }
}

TEST_CASE("window time cannot go backwards") {
  VolumeWindow window(100, 0.5);
  window.advance_to(50);
  CHECK_THROWS_AS(window.advance_to(49), std::invalid_argument);
}

namespace {

struct RouterFixture {
  VolumeWindow window{10000, 0.9};
  Rng rng{1};
};

}  // namespace

TEST_CASE("marketable order goes to the better best price") {
  RouterFixture f;
  // buy: B quotes the lower ask and the order crosses it
  CHECK(select_market(Side::Buy, Price{10020}, Price{10010}, Price{10010}, Price{10005},
                      f.window, f.rng) == Market::B);
  // sell: A quotes the higher bid
  CHECK(select_market(Side::Sell, Price{9990}, Price{9990}, Price{10000}, Price{9995},
                      f.window, f.rng) == Market::A);
}

TEST_CASE("an empty side is strictly worse than any quote") {
  RouterFixture f;
  CHECK(select_market(Side::Buy, Price{10010}, Price{10010}, std::nullopt, Price{10005},
                      f.window, f.rng) == Market::B);
  CHECK(select_market(Side::Buy, Price{10010}, Price{10010}, Price{10005}, std::nullopt,
                      f.window, f.rng) == Market::A);
}

TEST_CASE("non-marketable orders route probabilistically even when quotes differ") {
  VolumeWindow window(10000, 1.0);  // always market A
  Rng rng(3);
  // limit order in both markets: price below both asks
  CHECK(select_market(Side::Buy, Price{10000}, Price{10000}, Price{10010}, Price{10005},
                      window, rng) == Market::A);
  VolumeWindow window_b(10000, 0.0);  // always market B
  CHECK(select_market(Side::Buy, Price{10000}, Price{10000}, Price{10010}, Price{10005},
                      window_b, rng) == Market::B);
}

TEST_CASE("equal best prices route probabilistically") {
  VolumeWindow window(10000, 0.0);
  Rng rng(3);
  CHECK(select_market(Side::Buy, Price{10020}, Price{10020}, Price{10010}, Price{10010},
                      window, rng) == Market::B);
}

TEST_CASE("both sides empty route probabilistically") {
  VolumeWindow window(10000, 1.0);
  Rng rng(3);
  CHECK(select_market(Side::Buy, Price{10020}, Price{10020}, std::nullopt, std::nullopt,
                      window, rng) == Market::A);
}

TEST_CASE("probabilistic routing frequencies follow the volume share") {
  VolumeWindow window(10000, 0.9);
  Rng rng(20240101);
  const int draws = 10000;
  int count_a = 0;
  for (int i = 0; i < draws; ++i) {
    // identical books: equal best prices on the relevant side
    const Market market = select_market(Side::Buy, Price{10000}, Price{10000},
                                        Price{10010}, Price{10010}, window, rng);
    if (market == Market::A) ++count_a;
  }
  const double expected_a = 0.9 * draws;
  const double expected_b = 0.1 * draws;
  const double chi2 =
      (count_a - expected_a) * (count_a - expected_a) / expected_a +
      (draws - count_a - expected_b) * (draws - count_a - expected_b) / expected_b;
  CHECK(chi2 < 10.828);  // p > 0.001 at one degree of freedom
}
