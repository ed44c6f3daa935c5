#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ticksim/price.hpp"
#include "ticksim/price_history.hpp"
#include "ticksim/rng.hpp"

namespace ticksim {

// Strategy weights and lookback of one agent, fixed at initialization.
struct AgentProfile {
  uint32_t id = 0;               // 1..n
  double fundamental_weight = 0; // toward reversion to the fundamental price
  double technical_weight = 0;   // toward continuation of the lookback return
  double noise_weight = 0;
  int64_t lookback = 1;          // ticks, integer in {1, ..., tau_max}
};

// The slice of the scenario the agent decision path needs, with prices
// already expressed in quanta.
struct AgentParams {
  double fundamental_price = 0;  // quanta
  double order_scatter = 0;      // std dev of the order price around the
                                 // expected price, quanta
  double noise_stddev = 0;       // std dev of the per-turn expectation noise
  int64_t warmup_until = 0;      // ticks with the fundamental-anchored side rule
};

struct OrderIntent {
  uint32_t agent_id = 0;
  std::optional<Side> side;      // nullopt = no order this turn
  double raw_price = 0;          // un-rounded order price, quanta
  double expected_price = 0;     // quanta
};

// Draws n profiles. Consumes the generator in a fixed order: for agent 1 the
// fundamental, technical and noise weights then the lookback, then agent 2,
// and so on (four uniforms per agent).
std::vector<AgentProfile> init_population(int64_t n, double w1_max, double w2_max,
                                          double w3_max, int64_t tau_max, Rng& rng);

// Lookback return: log(P^t / P^(t-tau)) once at least tau ticks of history
// exist (t >= tau), zero before that.
double technical_return(const PriceHistory& history, int64_t t, int64_t tau);

// Weighted blend of the fundamental, technical and noise terms with the noise
// value supplied by the caller. Throws when all three weights are zero.
double expected_return_with_noise(const AgentProfile& profile, double fundamental_price,
                                  double current_price, double historical_return,
                                  double noise);

// Same, drawing the noise term fresh from the generator (one normal).
double expected_return(const AgentProfile& profile, const PriceHistory& history,
                       int64_t t, double fundamental_price, double noise_stddev,
                       Rng& rng);

double expected_price(double current_price, double expected_ret);

// Scatters the order price around the expected price (one normal draw).
double draw_order_price(double expected, double order_scatter, Rng& rng);

// Buy when the reference price is above the order price, sell when below,
// no order when exactly equal. The reference is the expected price, except
// during warmup (t < warmup_until) when it is the fundamental price so that
// both book sides accumulate resting orders.
std::optional<Side> decide_side(double expected, double order_price, int64_t t,
                                int64_t warmup_until, double fundamental_price);

// One full agent turn. Consumes, in order: one normal for the expectation
// noise, one normal for the order price. Turns skipped before a draw point
// consume nothing from that point on: a zero-weight profile consumes no
// draws, a non-positive order price ends the turn after both draws.
std::optional<OrderIntent> form_intent(const AgentProfile& profile,
                                       const PriceHistory& history, int64_t t,
                                       const AgentParams& params, Rng& rng);

}  // namespace ticksim
