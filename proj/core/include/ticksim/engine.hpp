#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ticksim/agents.hpp"
#include "ticksim/order.hpp"
#include "ticksim/order_book.hpp"
#include "ticksim/price.hpp"
#include "ticksim/price_history.hpp"
#include "ticksim/router.hpp"
#include "ticksim/rng.hpp"

namespace ticksim {

// Full parameter set of one simulation. Field names double as the keys of
// the scenario config file. Tick sizes are percentages of the fundamental
// price; P_sigma and P_f are in natural price units.
struct ScenarioConfig {
  int64_t n = 1000;
  double w1_max = 1.0;
  double w2_max = 10.0;
  double w3_max = 1.0;
  int64_t tau_max = 10000;
  double sigma_eps = 0.06;
  double P_sigma = 30.0;
  int64_t t_c = 20000;
  double P_f = 10000.0;
  int64_t t_AB = 10000;
  double dP_A = 0.01;   // percent of P_f
  double dP_B = 0.01;   // percent of P_f
  double initial_W_A = 0.9;
  int64_t total_steps = 1'000'000;
  int64_t ticks_per_day = 2000;  // t_AB = 10000 spans 5 days
  uint64_t seed = 1;

  // Throws std::invalid_argument describing the first violated constraint.
  void validate() const;

  Price tick_a() const { return tick_from_percent(dP_A); }
  Price tick_b() const { return tick_from_percent(dP_B); }
  double fundamental_quanta() const {
    return static_cast<double>(kQuantaPerFundamental);
  }
  double order_scatter_quanta() const {
    return units_to_quanta(P_sigma, P_f);
  }
};

struct RunOptions {
  bool dual_market = true;    // false: market A only, no routing
  bool record_trades = true;  // keep full per-market trade logs
  bool record_prices = true;  // keep per-tick price series
};

struct SimulationCounters {
  int64_t submitted = 0;   // orders accepted by either book
  int64_t filled = 0;      // order fills (two per trade)
  int64_t canceled = 0;    // expired resting orders
  int64_t resting_end = 0; // still resting when the run finished
  int64_t skipped_turns = 0;
  int64_t trades_a = 0;
  int64_t trades_b = 0;
};

struct SimulationOutput {
  ScenarioConfig config;
  bool dual_market = true;
  // Per-tick series in quanta, length total_steps when recorded. The
  // consolidated series carries the last trade price of either market; the
  // per-market series carry each market's own last trade, all starting at
  // the fundamental price.
  std::vector<Price> consolidated;
  std::vector<Price> price_a;
  std::vector<Price> price_b;
  std::vector<Trade> trades_a;
  std::vector<Trade> trades_b;
  // Trailing-one-day trading-volume share of market A, one entry per
  // completed day; days without trades carry the previous value.
  std::vector<double> share_by_day;
  SimulationCounters counters;
  std::vector<AgentProfile> population;
};

// Round-robin scheduler driving the agent population, the router and both
// books through t = 1..total_steps with a single seeded generator. Draw
// order: population init first, then per tick the agent's two normals and,
// only when routing falls through to the probabilistic branch, one uniform.
class Simulation {
 public:
  explicit Simulation(ScenarioConfig config, RunOptions options = {});

  // Advances one tick: purge expired orders, let the scheduled agent act,
  // route and submit the order, record prices. Time advances whether or not
  // an order or trade happened.
  void step();

  int64_t now() const { return now_; }
  bool done() const { return now_ >= config_.total_steps; }

  // Index of the agent that acts at tick t (round robin over 1..n).
  uint32_t agent_for_tick(int64_t t) const {
    return static_cast<uint32_t>((t - 1) % config_.n + 1);
  }

  const ScenarioConfig& config() const { return config_; }
  const LimitOrderBook& book(Market m) const {
    return m == Market::A ? book_a_ : book_b_;
  }
  const PriceHistory& history() const { return history_; }
  const VolumeWindow& window() const { return window_; }
  const std::vector<AgentProfile>& population() const { return population_; }
  Price consolidated_price() const { return consolidated_price_; }
  Rng& rng() { return rng_; }

  // Finalizes counters and moves the accumulated output out.
  SimulationOutput take_output();

  static SimulationOutput run(const ScenarioConfig& config, RunOptions options = {});

 private:
  bool submit_to(Market market, Side side, Price price, uint32_t agent_id);

  ScenarioConfig config_;
  RunOptions options_;
  Rng rng_;
  std::vector<AgentProfile> population_;
  AgentParams agent_params_;
  LimitOrderBook book_a_;
  LimitOrderBook book_b_;
  VolumeWindow window_;
  PriceHistory history_;
  int64_t now_ = 0;
  uint64_t next_order_id_ = 1;
  Price consolidated_price_;
  Price last_price_a_;
  Price last_price_b_;
  int64_t day_trades_a_ = 0;
  int64_t day_trades_b_ = 0;
  double last_day_share_;
  SimulationOutput output_;
};

}  // namespace ticksim
