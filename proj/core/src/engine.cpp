#include "ticksim/engine.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace ticksim {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

void ScenarioConfig::validate() const {
  require(n >= 1, "n must be >= 1");
  require(w1_max > 0 && w2_max > 0 && w3_max > 0, "weight maxima must be positive");
  require(tau_max >= 1, "tau_max must be >= 1");
  require(sigma_eps > 0, "sigma_eps must be positive");
  require(P_sigma > 0, "P_sigma must be positive");
  require(t_c >= 1, "t_c must be >= 1");
  require(P_f > 0, "P_f must be positive");
  require(t_AB >= 1, "t_AB must be >= 1");
  require(initial_W_A >= 0 && initial_W_A <= 1, "initial_W_A must lie in [0, 1]");
  require(total_steps >= 0, "total_steps must be >= 0");
  require(ticks_per_day >= 1, "ticks_per_day must be >= 1");
  tick_from_percent(dP_A);  // throws when not representable in quanta
  tick_from_percent(dP_B);
}

Simulation::Simulation(ScenarioConfig config, RunOptions options)
    : config_((config.validate(), std::move(config))),
      options_(options),
      rng_(config_.seed),
      population_(init_population(config_.n, config_.w1_max, config_.w2_max,
                                  config_.w3_max, config_.tau_max, rng_)),
      agent_params_{config_.fundamental_quanta(), config_.order_scatter_quanta(),
                    config_.sigma_eps, config_.t_c},
      book_a_(config_.tick_a(), config_.t_c, options.record_trades),
      book_b_(config_.tick_b(), config_.t_c, options.record_trades),
      window_(config_.t_AB, config_.initial_W_A),
      history_(config_.tau_max + 1, config_.fundamental_quanta()),
      consolidated_price_(kQuantaPerFundamental),
      last_price_a_(kQuantaPerFundamental),
      last_price_b_(kQuantaPerFundamental),
      last_day_share_(config_.initial_W_A) {
  output_.config = config_;
  output_.dual_market = options_.dual_market;
  if (options_.record_prices) {
    const auto reserve = static_cast<size_t>(config_.total_steps);
    output_.consolidated.reserve(reserve);
    output_.price_a.reserve(reserve);
    if (options_.dual_market) output_.price_b.reserve(reserve);
  }
}

bool Simulation::submit_to(Market market, Side side, Price price, uint32_t agent_id) {
  LimitOrderBook& book = market == Market::A ? book_a_ : book_b_;
  const Order order{next_order_id_++, agent_id, side, price, now_};
  const ExecutionReport report = book.submit(order);
  if (!report.filled()) return false;

  consolidated_price_ = report.price;
  if (market == Market::A) {
    last_price_a_ = report.price;
    ++day_trades_a_;
    ++output_.counters.trades_a;
  } else {
    last_price_b_ = report.price;
    ++day_trades_b_;
    ++output_.counters.trades_b;
  }
  if (options_.dual_market) window_.record_trade(market, now_);
  return true;
}

void Simulation::step() {
  const int64_t t = ++now_;
  if (options_.dual_market) window_.advance_to(t);
  book_a_.purge_expired(t);
  if (options_.dual_market) book_b_.purge_expired(t);

  const AgentProfile& agent = population_[static_cast<size_t>((t - 1) % config_.n)];
  const std::optional<OrderIntent> intent =
      form_intent(agent, history_, t, agent_params_, rng_);

  bool placed = false;
  if (intent && intent->side) {
    const Side side = *intent->side;
    if (options_.dual_market) {
      const auto px_a = round_to_tick(intent->raw_price, side, book_a_.tick());
      const auto px_b = round_to_tick(intent->raw_price, side, book_b_.tick());
      if (px_a || px_b) {
        const Market market =
            select_market(side, px_a, px_b, book_a_.best_price(opposite(side)),
                          book_b_.best_price(opposite(side)), window_, rng_);
        const auto& px = market == Market::A ? px_a : px_b;
        if (px) {
          submit_to(market, side, *px, agent.id);
          placed = true;
        }
      }
    } else {
      const auto px = round_to_tick(intent->raw_price, side, book_a_.tick());
      if (px) {
        submit_to(Market::A, side, *px, agent.id);
        placed = true;
      }
    }
  }
  if (!placed) ++output_.counters.skipped_turns;

  if (options_.record_prices) {
    output_.consolidated.push_back(consolidated_price_);
    output_.price_a.push_back(last_price_a_);
    if (options_.dual_market) output_.price_b.push_back(last_price_b_);
  }
  history_.append(static_cast<double>(consolidated_price_));

  if (t % config_.ticks_per_day == 0) {
    const int64_t day_total = day_trades_a_ + day_trades_b_;
    if (day_total > 0) {
      last_day_share_ =
          static_cast<double>(day_trades_a_) / static_cast<double>(day_total);
    }
    output_.share_by_day.push_back(last_day_share_);
    day_trades_a_ = 0;
    day_trades_b_ = 0;
  }
}

SimulationOutput Simulation::take_output() {
  output_.counters.submitted =
      book_a_.counters().submitted_total() + book_b_.counters().submitted_total();
  output_.counters.filled =
      book_a_.counters().filled_total() + book_b_.counters().filled_total();
  output_.counters.canceled =
      book_a_.counters().canceled_total() + book_b_.counters().canceled_total();
  output_.counters.resting_end = book_a_.resting_count() + book_b_.resting_count();
  output_.population = population_;
  if (options_.record_trades) {
    output_.trades_a = book_a_.take_trade_log();
    output_.trades_b = book_b_.take_trade_log();
  }
  return std::move(output_);
}

SimulationOutput Simulation::run(const ScenarioConfig& config, RunOptions options) {
  Simulation simulation(config, options);
  while (!simulation.done()) simulation.step();
  return simulation.take_output();
}

}  // namespace ticksim
