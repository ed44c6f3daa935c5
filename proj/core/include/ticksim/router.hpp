#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ticksim/order.hpp"
#include "ticksim/price.hpp"
#include "ticksim/rng.hpp"

namespace ticksim {

// Rolling per-market trade counts over the trailing `span` ticks. A trade
// recorded at tick s stays visible at tick t while s is inside (t-span, t].
class VolumeWindow {
 public:
  VolumeWindow(int64_t span, double initial_share);

  // Evicts buckets that fell out of the trailing window. `t` must be
  // non-decreasing across calls.
  void advance_to(int64_t t);

  void record_trade(Market market, int64_t t);

  // Trading-volume share of market A. When the window is empty the last
  // value computed from a non-empty window is returned (initially the
  // configured starting share).
  double share_a();

  int64_t volume(Market market) const {
    return static_cast<int64_t>(sums_[static_cast<size_t>(market)]);
  }
  double last_known_share() const { return last_known_share_; }
  int64_t span() const { return span_; }

 private:
  int64_t span_;
  int64_t current_t_ = 0;
  std::vector<uint32_t> buckets_[2];  // per-tick trade counts, indexed by Market
  uint64_t sums_[2] = {0, 0};
  double last_known_share_;
};

// Venue choice for one order, given the candidate price on each market's
// grid (nullopt when the order cannot be represented there). Marketability
// is judged against each market's own grid; "better" compares the raw best
// prices across markets, an empty side being strictly worse than any price.
// When the relevant best prices differ and the order is marketable in at
// least one market, the better-priced market wins; in every other case the
// choice is random with probability share_a for market A (one uniform draw).
Market select_market(Side side, std::optional<Price> rounded_a,
                     std::optional<Price> rounded_b, std::optional<Price> best_opp_a,
                     std::optional<Price> best_opp_b, VolumeWindow& window, Rng& rng);

}  // namespace ticksim
