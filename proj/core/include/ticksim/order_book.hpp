#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "ticksim/order.hpp"
#include "ticksim/price.hpp"

namespace ticksim {

// Continuous double auction book for one market: price-time priority, FIFO
// within a price level, one share per order. An incoming order matches at
// most one resting order (all quantities are 1) and trades at the resting
// order's limit price. Resting orders expire after `lifetime` ticks counted
// inclusively: an order submitted at s is purged once now - s + 1 >= lifetime.
class LimitOrderBook {
 public:
  struct Counters {
    std::array<int64_t, 2> submitted{0, 0};  // indexed by Side
    std::array<int64_t, 2> filled{0, 0};
    std::array<int64_t, 2> canceled{0, 0};

    int64_t submitted_total() const { return submitted[0] + submitted[1]; }
    int64_t filled_total() const { return filled[0] + filled[1]; }
    int64_t canceled_total() const { return canceled[0] + canceled[1]; }
  };

  LimitOrderBook(Price tick, int64_t lifetime, bool log_trades = true);

  // Either fills against the single best resting counterparty or rests.
  // Precondition: order.price positive and on this book's tick grid; expired
  // orders already purged for order.submitted_at.
  ExecutionReport submit(const Order& order);

  // Removes every resting order whose inclusive age reached the lifetime.
  // Returns the number of orders canceled.
  int64_t purge_expired(int64_t now);

  std::optional<Price> best_bid() const;
  std::optional<Price> best_ask() const;
  std::optional<Price> best_price(Side side) const {
    return side == Side::Buy ? best_bid() : best_ask();
  }
  std::optional<Price> last_trade_price() const { return last_trade_price_; }

  Price tick() const { return tick_; }
  int64_t lifetime() const { return lifetime_; }
  const Counters& counters() const { return counters_; }
  int64_t trades() const { return trades_; }
  int64_t resting_count() const { return resting_count_[0] + resting_count_[1]; }
  int64_t resting_count(Side side) const {
    return resting_count_[static_cast<size_t>(side)];
  }

  const std::vector<Trade>& trade_log() const { return trade_log_; }
  std::vector<Trade> take_trade_log() { return std::move(trade_log_); }

  // Snapshot of every resting order, best-priced level first, FIFO within a
  // level. Intended for inspection and tests, not the hot path.
  std::vector<Order> resting_orders(Side side) const;

 private:
  struct Entry {
    uint64_t id;
    uint32_t agent_id;
    int64_t submitted_at;
  };
  struct Pending {
    uint64_t id;
    int64_t submitted_at;
    Price price;
    Side side;
  };

  using BidMap = std::map<Price, std::deque<Entry>, std::greater<Price>>;
  using AskMap = std::map<Price, std::deque<Entry>, std::less<Price>>;

  void validate_price(Price price) const;

  Price tick_;
  int64_t lifetime_;
  bool log_trades_;
  BidMap bids_;
  AskMap asks_;
  std::optional<Price> last_trade_price_;
  std::vector<Trade> trade_log_;
  std::deque<Pending> expiry_queue_;       // resting orders in submission order
  std::unordered_set<uint64_t> filled_ids_; // filled before their expiry entry popped
  std::array<int64_t, 2> resting_count_{0, 0};
  Counters counters_;
  int64_t trades_ = 0;
};

}  // namespace ticksim
