#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ticksim/engine.hpp"
#include "ticksim/price.hpp"

namespace ticksim {

// Per-tick log returns of a price series, with a label naming the source.
struct ReturnSeries {
  std::string source;
  std::vector<double> returns;

  static ReturnSeries from_prices(std::span<const Price> prices, std::string source);
  static ReturnSeries from_prices(std::span<const double> prices, std::string source);
};

// Sample standard deviation of the per-tick log returns, as a percentage.
// Welford accumulation; requires at least two returns.
double one_tick_volatility_pct(const ReturnSeries& series);

// Magnitude of realized price changes: sample standard deviation (in %) of
// the nonzero log returns between consecutive trades. Unlike the per-tick
// measure this tracks the quantization floor of a coarse grid, since a price
// that moves at all must move by at least one tick. Requires at least two
// nonzero moves.
double price_change_volatility_pct(std::span<const Trade> trades);

// Trailing-one-day volume share of market A at a 1-based day boundary.
// Throws std::out_of_range when the day was not recorded.
double market_share_at(int64_t day, std::span<const double> share_by_day);

struct OrderFlowRates {
  double execution = 0;     // filled / submitted
  double cancellation = 0;  // expired / submitted
};

// Throws std::invalid_argument when nothing was submitted.
OrderFlowRates execution_and_cancel_rates(int64_t submitted, int64_t filled,
                                          int64_t expired);

struct StylizedFacts {
  double excess_kurtosis = 0;
  std::vector<double> squared_return_acf;  // lags 1..max_lag
  int64_t sample_count = 0;
};

// Aggregates the per-tick returns into k-tick returns (sums of `sample_every`
// consecutive log returns) and reports their excess kurtosis and the
// autocorrelation of their squares. Throws std::invalid_argument when fewer
// than `min_samples` aggregated returns exist or their variance is zero.
StylizedFacts stylized_facts(const ReturnSeries& series, int64_t sample_every,
                             int64_t max_lag = 20, int64_t min_samples = 10000);

// One row of summary.csv.
struct SummaryRow {
  double dP_A = 0;
  double dP_B = 0;
  uint64_t seed = 0;
  double w_a_at_day = 0;     // W_A_500d column
  double sigma_t_pct = 0;    // one-tick volatility of market A's series
  double exec_rate = 0;
  double cancel_rate = 0;
  double kurtosis = 0;       // of k-tick consolidated returns
  double acf1 = 0;           // lag-1 autocorrelation of their squares
  std::string error;         // non-empty when the run failed
};

// Condenses a finished run. The share is read at `measurement_day`, clamped
// to the recorded range (the initial share when no day completed); values
// that cannot be computed (zero submissions, short series) become NaN.
SummaryRow summarize(const SimulationOutput& output, int64_t measurement_day = 500,
                     int64_t sample_every = 100);

}  // namespace ticksim
