#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracle/reference_stats.hpp"
#include "ticksim/metrics.hpp"
#include "ticksim/rng.hpp"

using namespace ticksim;

namespace {

ReturnSeries series_of(std::vector<double> returns) {
  ReturnSeries series;
  series.source = "synthetic";
  series.returns = std::move(returns);
  return series;
}

}  // namespace

TEST_CASE("log returns derive from consecutive prices") {
  const std::vector<Price> prices = {10000000, 10100000, 10100000, 9990000};
  const ReturnSeries series = ReturnSeries::from_prices(prices, "consolidated");
  REQUIRE(series.returns.size() == 3);
  CHECK(series.returns[0] == doctest::Approx(std::log(1.01)).epsilon(1e-15));
  CHECK(series.returns[1] == 0.0);
  CHECK(series.source == "consolidated");
}

TEST_CASE("constant price series has zero volatility") {
  const std::vector<Price> prices(100, 10000000);
  CHECK(one_tick_volatility_pct(ReturnSeries::from_prices(prices, "flat")) == 0.0);
}

TEST_CASE("alternating returns of 0.001 give about 0.1% volatility") {
  std::vector<double> returns(1000);
  for (size_t i = 0; i < returns.size(); ++i) returns[i] = i % 2 == 0 ? 0.001 : -0.001;
  // sample std of 1000 alternating returns: sqrt(1000/999) * 0.1%
  CHECK(one_tick_volatility_pct(series_of(returns)) ==
        doctest::Approx(0.10005003753127737).epsilon(1e-12));
}

TEST_CASE("volatility needs at least two returns") {
  CHECK_THROWS_AS(one_tick_volatility_pct(series_of({0.01})), std::invalid_argument);
  CHECK_THROWS_AS(one_tick_volatility_pct(series_of({})), std::invalid_argument);
}

TEST_CASE("volatility agrees with a two-pass extended-precision oracle") {
  Rng rng(808);
  std::vector<double> returns(1000000);
  double level = 0.0;
  for (double& r : returns) {
    // heteroskedastic stream to stress the accumulation
    level = 0.999 * level + rng.normal(0.0, 0.02);
    r = rng.normal(0.0003, 0.0005 * std::exp(level));
  }
  const double got = one_tick_volatility_pct(series_of(returns));
  const double want = static_cast<double>(oracle::two_pass_stddev(returns)) * 100.0;
  CHECK(std::abs(got - want) / want < 1e-12);
}

TEST_CASE("price-change volatility ignores zero moves") {
  std::vector<Trade> trades;
  for (const Price p : {Price{10000}, Price{11000}, Price{11000}, Price{10000},
                        Price{11000}}) {
    Trade t;
    t.price = p;
    trades.push_back(t);
  }
  // nonzero moves: +ln(1.1), -ln(1.1), +ln(1.1); the flat 11000->11000 is skipped
  const double up = std::log(1.1);
  const double mean = up / 3.0;
  const double want =
      std::sqrt(((up - mean) * (up - mean) * 2 + (-up - mean) * (-up - mean)) / 2.0) *
      100.0;
  CHECK(price_change_volatility_pct(trades) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("price-change volatility needs at least two moves") {
  std::vector<Trade> flat(10);
  for (Trade& t : flat) t.price = 10000;
  CHECK_THROWS_AS(price_change_volatility_pct(flat), std::invalid_argument);
  CHECK_THROWS_AS(price_change_volatility_pct(std::span<const Trade>{}),
                  std::invalid_argument);
}

TEST_CASE("market share lookup validates the day") {
  const std::vector<double> share = {0.9, 0.8, 1.0};
  CHECK(market_share_at(1, share) == 0.9);
  CHECK(market_share_at(3, share) == 1.0);
  CHECK_THROWS_AS(market_share_at(0, share), std::out_of_range);
  CHECK_THROWS_AS(market_share_at(4, share), std::out_of_range);
}

TEST_CASE("execution and cancel rates partition the submitted orders") {
  const OrderFlowRates rates = execution_and_cancel_rates(100, 60, 30);
  CHECK(rates.execution == doctest::Approx(0.6));
  CHECK(rates.cancellation == doctest::Approx(0.3));

  const OrderFlowRates all_marketable = execution_and_cancel_rates(50, 50, 0);
  CHECK(all_marketable.execution == 1.0);
  CHECK(all_marketable.cancellation == 0.0);

  CHECK_THROWS_AS(execution_and_cancel_rates(0, 0, 0), std::invalid_argument);
}

TEST_CASE("iid normal returns show no fat tails and no clustering") {
  Rng rng(501);
  std::vector<double> returns(20000);
  for (double& r : returns) r = rng.normal(0.0, 0.01);
  const StylizedFacts facts = stylized_facts(series_of(returns), 1, 20, 10000);
  REQUIRE(facts.sample_count == 20000);
  const double bound = 3.0 / std::sqrt(static_cast<double>(facts.sample_count));
  CHECK(std::abs(facts.excess_kurtosis) < 0.15);
  for (const double acf : facts.squared_return_acf) CHECK(std::abs(acf) < bound);
}

TEST_CASE("stylized facts match the reference implementations") {
  Rng rng(99);
  std::vector<double> returns(30000);
  double vol_state = 0.0;
  for (double& r : returns) {
    vol_state = 0.97 * vol_state + rng.normal(0.0, 0.3);
    r = rng.normal(0.0, 0.01 * std::exp(0.2 * vol_state));
  }
  const StylizedFacts facts = stylized_facts(series_of(returns), 1, 5, 10000);
  CHECK(static_cast<double>(oracle::excess_kurtosis(returns)) ==
        doctest::Approx(facts.excess_kurtosis).epsilon(1e-9));
  std::vector<double> squared(returns.size());
  for (size_t i = 0; i < returns.size(); ++i) squared[i] = returns[i] * returns[i];
  for (size_t lag = 1; lag <= 5; ++lag) {
    CHECK(static_cast<double>(oracle::autocorrelation(squared, lag)) ==
          doctest::Approx(facts.squared_return_acf[lag - 1]).epsilon(1e-9));
  }
  // a volatility-clustered stream must show positive lag-1 clustering
  CHECK(facts.squared_return_acf.front() > 0.05);
  CHECK(facts.excess_kurtosis > 0.5);
}

TEST_CASE("sampling every k ticks sums consecutive log returns") {
  const std::vector<double> returns = {0.01, 0.02, -0.01, 0.005, 0.001, -0.03, 0.02};
  const StylizedFacts facts = stylized_facts(series_of(returns), 2, 1, 3);
  CHECK(facts.sample_count == 3);  // the trailing odd return is dropped
}

TEST_CASE("degenerate inputs are signaled") {
  CHECK_THROWS_AS(stylized_facts(series_of(std::vector<double>(20000, 0.001)), 1, 20, 10000),
                  std::invalid_argument);  // constant series: zero variance
  CHECK_THROWS_AS(stylized_facts(series_of({0.01, 0.02}), 1, 20, 10000),
                  std::invalid_argument);  // insufficient data
}
