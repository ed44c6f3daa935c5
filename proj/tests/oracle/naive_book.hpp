#pragma once

// Test-only reference matcher. Keeps every resting order in one flat vector
// and rescans it on each submission, so it shares no code or data layout
// with the production book it checks.

#include <algorithm>
#include <optional>
#include <vector>

#include "ticksim/order.hpp"
#include "ticksim/price.hpp"

namespace ticksim::oracle {

class NaiveBook {
 public:
  NaiveBook(Price tick, int64_t lifetime) : tick_(tick), lifetime_(lifetime) {}

  std::optional<Trade> submit(const Order& order) {
    // Full rescan: best-priced crossing counterorder, earliest submission wins.
    const Order* best = nullptr;
    for (const Order& resting : resting_) {
      if (resting.side == order.side) continue;
      const bool crosses = order.side == Side::Buy ? order.price >= resting.price
                                                   : order.price <= resting.price;
      if (!crosses) continue;
      if (best == nullptr) {
        best = &resting;
        continue;
      }
      const bool better_price = order.side == Side::Buy ? resting.price < best->price
                                                        : resting.price > best->price;
      if (better_price ||
          (resting.price == best->price && resting.submitted_at < best->submitted_at)) {
        best = &resting;
      }
    }
    if (best == nullptr) {
      resting_.push_back(order);
      return std::nullopt;
    }
    const Order counter = *best;
    resting_.erase(resting_.begin() + (best - resting_.data()));
    Trade trade;
    trade.t = order.submitted_at;
    trade.price = counter.price;
    trade.aggressor = order.side;
    if (order.side == Side::Buy) {
      trade.buy_agent = order.agent_id;
      trade.sell_agent = counter.agent_id;
      trade.buy_order_id = order.id;
      trade.sell_order_id = counter.id;
    } else {
      trade.buy_agent = counter.agent_id;
      trade.sell_agent = order.agent_id;
      trade.buy_order_id = counter.id;
      trade.sell_order_id = order.id;
    }
    log_.push_back(trade);
    return trade;
  }

  int64_t purge_expired(int64_t now) {
    const auto expired = [&](const Order& o) {
      return now - o.submitted_at + 1 >= lifetime_;
    };
    const auto removed = std::count_if(resting_.begin(), resting_.end(), expired);
    resting_.erase(std::remove_if(resting_.begin(), resting_.end(), expired),
                   resting_.end());
    return removed;
  }

  std::optional<Price> best_bid() const {
    std::optional<Price> best;
    for (const Order& o : resting_) {
      if (o.side == Side::Buy && (!best || o.price > *best)) best = o.price;
    }
    return best;
  }

  std::optional<Price> best_ask() const {
    std::optional<Price> best;
    for (const Order& o : resting_) {
      if (o.side == Side::Sell && (!best || o.price < *best)) best = o.price;
    }
    return best;
  }

  // Best price first, FIFO within a level (the production book's order).
  std::vector<Order> resting_orders(Side side) const {
    std::vector<Order> result;
    for (const Order& o : resting_) {
      if (o.side == side) result.push_back(o);
    }
    std::stable_sort(result.begin(), result.end(), [side](const Order& a, const Order& b) {
      if (a.price != b.price) {
        return side == Side::Buy ? a.price > b.price : a.price < b.price;
      }
      return a.submitted_at < b.submitted_at;
    });
    return result;
  }

  const std::vector<Trade>& trade_log() const { return log_; }

 private:
  Price tick_;
  int64_t lifetime_;
  std::vector<Order> resting_;
  std::vector<Trade> log_;
};

}  // namespace ticksim::oracle
