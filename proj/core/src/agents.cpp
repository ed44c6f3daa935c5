#include "ticksim/agents.hpp"

#include <cmath>
#include <stdexcept>

namespace ticksim {

std::vector<AgentProfile> init_population(int64_t n, double w1_max, double w2_max,
                                          double w3_max, int64_t tau_max, Rng& rng) {
  if (n < 1) throw std::invalid_argument("population size must be >= 1");
  if (!(w1_max > 0) || !(w2_max > 0) || !(w3_max > 0))
    throw std::invalid_argument("weight maxima must be positive");
  if (tau_max < 1) throw std::invalid_argument("tau_max must be >= 1");

  std::vector<AgentProfile> population;
  population.reserve(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) {
    AgentProfile profile;
    profile.id = static_cast<uint32_t>(i + 1);
    profile.fundamental_weight = rng.uniform() * w1_max;
    profile.technical_weight = rng.uniform() * w2_max;
    profile.noise_weight = rng.uniform() * w3_max;
    profile.lookback = rng.uniform_index(tau_max);
    population.push_back(profile);
  }
  return population;
}

double technical_return(const PriceHistory& history, int64_t t, int64_t tau) {
  if (t < tau) return 0.0;
  return std::log(history.current() / history.at(t - tau));
}

double expected_return_with_noise(const AgentProfile& profile, double fundamental_price,
                                  double current_price, double historical_return,
                                  double noise) {
  const double weight_sum =
      profile.fundamental_weight + profile.technical_weight + profile.noise_weight;
  if (weight_sum == 0.0)
    throw std::invalid_argument("agent has all-zero strategy weights");
  return (profile.fundamental_weight * std::log(fundamental_price / current_price) +
          profile.technical_weight * historical_return +
          profile.noise_weight * noise) /
         weight_sum;
}

double expected_return(const AgentProfile& profile, const PriceHistory& history,
                       int64_t t, double fundamental_price, double noise_stddev,
                       Rng& rng) {
  const double noise = rng.normal(0.0, noise_stddev);
  return expected_return_with_noise(profile, fundamental_price, history.current(),
                                    technical_return(history, t, profile.lookback),
                                    noise);
}

double expected_price(double current_price, double expected_ret) {
  return current_price * std::exp(expected_ret);
}

double draw_order_price(double expected, double order_scatter, Rng& rng) {
  return rng.normal(expected, order_scatter);
}

std::optional<Side> decide_side(double expected, double order_price, int64_t t,
                                int64_t warmup_until, double fundamental_price) {
  const double reference = t < warmup_until ? fundamental_price : expected;
  if (reference > order_price) return Side::Buy;
  if (reference < order_price) return Side::Sell;
  return std::nullopt;
}

std::optional<OrderIntent> form_intent(const AgentProfile& profile,
                                       const PriceHistory& history, int64_t t,
                                       const AgentParams& params, Rng& rng) {
  const double weight_sum =
      profile.fundamental_weight + profile.technical_weight + profile.noise_weight;
  if (weight_sum == 0.0) return std::nullopt;

  const double ret = expected_return(profile, history, t, params.fundamental_price,
                                     params.noise_stddev, rng);
  const double expected = expected_price(history.current(), ret);
  const double raw = draw_order_price(expected, params.order_scatter, rng);
  if (!(raw > 0.0)) return std::nullopt;

  OrderIntent intent;
  intent.agent_id = profile.id;
  intent.side = decide_side(expected, raw, t, params.warmup_until,
                            params.fundamental_price);
  intent.raw_price = raw;
  intent.expected_price = expected;
  return intent;
}

}  // namespace ticksim
