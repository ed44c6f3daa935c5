#include "ticksim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ticksim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <typename T>
ReturnSeries log_returns(std::span<const T> prices, std::string source) {
  ReturnSeries series;
  series.source = std::move(source);
  if (prices.size() >= 2) {
    series.returns.reserve(prices.size() - 1);
    for (size_t i = 1; i < prices.size(); ++i) {
      series.returns.push_back(std::log(static_cast<double>(prices[i]) /
                                        static_cast<double>(prices[i - 1])));
    }
  }
  return series;
}

}  // namespace

ReturnSeries ReturnSeries::from_prices(std::span<const Price> prices,
                                       std::string source) {
  return log_returns(prices, std::move(source));
}

ReturnSeries ReturnSeries::from_prices(std::span<const double> prices,
                                       std::string source) {
  return log_returns(prices, std::move(source));
}

double one_tick_volatility_pct(const ReturnSeries& series) {
  const auto& r = series.returns;
  if (r.size() < 2) {
    throw std::invalid_argument("one-tick volatility needs at least two returns, got " +
                                std::to_string(r.size()));
  }
  double mean = 0.0;
  double m2 = 0.0;
  for (size_t i = 0; i < r.size(); ++i) {
    const double delta = r[i] - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (r[i] - mean);
  }
  return std::sqrt(m2 / static_cast<double>(r.size() - 1)) * 100.0;
}

double price_change_volatility_pct(std::span<const Trade> trades) {
  double mean = 0.0;
  double m2 = 0.0;
  size_t count = 0;
  for (size_t i = 1; i < trades.size(); ++i) {
    if (trades[i].price == trades[i - 1].price) continue;
    const double move = std::log(static_cast<double>(trades[i].price) /
                                 static_cast<double>(trades[i - 1].price));
    ++count;
    const double delta = move - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (move - mean);
  }
  if (count < 2) {
    throw std::invalid_argument("price-change volatility needs at least two moves, got " +
                                std::to_string(count));
  }
  return std::sqrt(m2 / static_cast<double>(count - 1)) * 100.0;
}

double market_share_at(int64_t day, std::span<const double> share_by_day) {
  if (day < 1 || day > static_cast<int64_t>(share_by_day.size())) {
    throw std::out_of_range("day " + std::to_string(day) + " outside recorded range of " +
                            std::to_string(share_by_day.size()) + " days");
  }
  return share_by_day[static_cast<size_t>(day - 1)];
}

OrderFlowRates execution_and_cancel_rates(int64_t submitted, int64_t filled,
                                          int64_t expired) {
  if (submitted <= 0) throw std::invalid_argument("no orders were submitted");
  return OrderFlowRates{static_cast<double>(filled) / static_cast<double>(submitted),
                        static_cast<double>(expired) / static_cast<double>(submitted)};
}

StylizedFacts stylized_facts(const ReturnSeries& series, int64_t sample_every,
                             int64_t max_lag, int64_t min_samples) {
  if (sample_every < 1) throw std::invalid_argument("sampling interval must be >= 1");
  if (max_lag < 1) throw std::invalid_argument("max lag must be >= 1");

  const auto k = static_cast<size_t>(sample_every);
  std::vector<double> sampled;
  sampled.reserve(series.returns.size() / k);
  double acc = 0.0;
  size_t in_block = 0;
  for (const double r : series.returns) {
    acc += r;
    if (++in_block == k) {
      sampled.push_back(acc);
      acc = 0.0;
      in_block = 0;
    }
  }
  const auto n = static_cast<int64_t>(sampled.size());
  if (n < min_samples || n <= max_lag + 1) {
    throw std::invalid_argument("insufficient data: " + std::to_string(n) +
                                " sampled returns");
  }
  const auto [min_it, max_it] = std::minmax_element(sampled.begin(), sampled.end());
  if (*min_it == *max_it) {
    throw std::invalid_argument("degenerate series: constant returns");
  }

  double mean = 0.0;
  for (const double x : sampled) mean += x;
  mean /= static_cast<double>(n);
  double m2 = 0.0;
  double m4 = 0.0;
  for (const double x : sampled) {
    const double d = x - mean;
    const double d2 = d * d;
    m2 += d2;
    m4 += d2 * d2;
  }
  m2 /= static_cast<double>(n);
  m4 /= static_cast<double>(n);
  if (m2 == 0.0) throw std::invalid_argument("degenerate series: zero variance");

  StylizedFacts facts;
  facts.sample_count = n;
  facts.excess_kurtosis = m4 / (m2 * m2) - 3.0;

  std::vector<double> squared(sampled.size());
  std::transform(sampled.begin(), sampled.end(), squared.begin(),
                 [](double x) { return x * x; });
  double sq_mean = 0.0;
  for (const double s : squared) sq_mean += s;
  sq_mean /= static_cast<double>(n);
  double denom = 0.0;
  for (const double s : squared) denom += (s - sq_mean) * (s - sq_mean);
  if (denom == 0.0) throw std::invalid_argument("degenerate series: constant squares");

  facts.squared_return_acf.reserve(static_cast<size_t>(max_lag));
  for (int64_t lag = 1; lag <= max_lag; ++lag) {
    double cov = 0.0;
    for (int64_t i = 0; i + lag < n; ++i) {
      cov += (squared[static_cast<size_t>(i)] - sq_mean) *
             (squared[static_cast<size_t>(i + lag)] - sq_mean);
    }
    facts.squared_return_acf.push_back(cov / denom);
  }
  return facts;
}

SummaryRow summarize(const SimulationOutput& output, int64_t measurement_day,
                     int64_t sample_every) {
  SummaryRow row;
  row.dP_A = output.config.dP_A;
  row.dP_B = output.config.dP_B;
  row.seed = output.config.seed;

  const auto days = static_cast<int64_t>(output.share_by_day.size());
  if (days == 0) {
    row.w_a_at_day = output.config.initial_W_A;
  } else {
    row.w_a_at_day = market_share_at(std::min(measurement_day, days),
                                     output.share_by_day);
  }

  row.sigma_t_pct = kNaN;
  if (output.price_a.size() >= 3) {
    row.sigma_t_pct =
        one_tick_volatility_pct(ReturnSeries::from_prices(output.price_a, "market_A"));
  }

  row.exec_rate = kNaN;
  row.cancel_rate = kNaN;
  if (output.counters.submitted > 0) {
    const OrderFlowRates rates = execution_and_cancel_rates(
        output.counters.submitted, output.counters.filled, output.counters.canceled);
    row.exec_rate = rates.execution;
    row.cancel_rate = rates.cancellation;
  }

  row.kurtosis = kNaN;
  row.acf1 = kNaN;
  try {
    const StylizedFacts facts = stylized_facts(
        ReturnSeries::from_prices(output.consolidated, "consolidated"), sample_every,
        1, 100);
    row.kurtosis = facts.excess_kurtosis;
    row.acf1 = facts.squared_return_acf.front();
  } catch (const std::invalid_argument&) {
    // short or degenerate run: leave NaN
  }
  return row;
}

}  // namespace ticksim
