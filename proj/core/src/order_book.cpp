#include "ticksim/order_book.hpp"

#include <stdexcept>
#include <string>

namespace ticksim {

LimitOrderBook::LimitOrderBook(Price tick, int64_t lifetime, bool log_trades)
    : tick_(tick), lifetime_(lifetime), log_trades_(log_trades) {
  if (tick <= 0) throw std::invalid_argument("tick must be positive");
  if (lifetime <= 0) throw std::invalid_argument("order lifetime must be positive");
}

void LimitOrderBook::validate_price(Price price) const {
  if (price <= 0 || price % tick_ != 0) {
    throw std::invalid_argument("order price " + std::to_string(price) +
                                " is not on the tick grid of " + std::to_string(tick_));
  }
}

ExecutionReport LimitOrderBook::submit(const Order& order) {
  validate_price(order.price);
  const auto side_idx = static_cast<size_t>(order.side);
  ++counters_.submitted[side_idx];

  if (order.side == Side::Buy) {
    auto it = asks_.begin();
    if (it != asks_.end() && order.price >= it->first) {
      const Price trade_price = it->first;
      const Entry resting = it->second.front();
      it->second.pop_front();
      if (it->second.empty()) asks_.erase(it);
      --resting_count_[static_cast<size_t>(Side::Sell)];
      filled_ids_.insert(resting.id);
      ++counters_.filled[static_cast<size_t>(Side::Buy)];
      ++counters_.filled[static_cast<size_t>(Side::Sell)];
      ++trades_;
      last_trade_price_ = trade_price;
      if (log_trades_) {
        trade_log_.push_back(Trade{order.submitted_at, trade_price, Side::Buy,
                                   order.agent_id, resting.agent_id, order.id,
                                   resting.id});
      }
      return ExecutionReport{ExecutionReport::Kind::Filled, trade_price};
    }
    bids_[order.price].push_back(Entry{order.id, order.agent_id, order.submitted_at});
  } else {
    auto it = bids_.begin();
    if (it != bids_.end() && order.price <= it->first) {
      const Price trade_price = it->first;
      const Entry resting = it->second.front();
      it->second.pop_front();
      if (it->second.empty()) bids_.erase(it);
      --resting_count_[static_cast<size_t>(Side::Buy)];
      filled_ids_.insert(resting.id);
      ++counters_.filled[static_cast<size_t>(Side::Buy)];
      ++counters_.filled[static_cast<size_t>(Side::Sell)];
      ++trades_;
      last_trade_price_ = trade_price;
      if (log_trades_) {
        trade_log_.push_back(Trade{order.submitted_at, trade_price, Side::Sell,
                                   resting.agent_id, order.agent_id, resting.id,
                                   order.id});
      }
      return ExecutionReport{ExecutionReport::Kind::Filled, trade_price};
    }
    asks_[order.price].push_back(Entry{order.id, order.agent_id, order.submitted_at});
  }

  ++resting_count_[side_idx];
  expiry_queue_.push_back(Pending{order.id, order.submitted_at, order.price, order.side});
  return ExecutionReport{ExecutionReport::Kind::Rested, order.price};
}

int64_t LimitOrderBook::purge_expired(int64_t now) {
  int64_t removed = 0;
  while (!expiry_queue_.empty() &&
         now - expiry_queue_.front().submitted_at + 1 >= lifetime_) {
    const Pending pending = expiry_queue_.front();
    expiry_queue_.pop_front();
    if (filled_ids_.erase(pending.id) > 0) continue;

    // The expiring order is the oldest still resting, so it sits at the front
    // of its own price level (everything older was filled or already purged).
    if (pending.side == Side::Buy) {
      auto it = bids_.find(pending.price);
      it->second.pop_front();
      if (it->second.empty()) bids_.erase(it);
    } else {
      auto it = asks_.find(pending.price);
      it->second.pop_front();
      if (it->second.empty()) asks_.erase(it);
    }
    --resting_count_[static_cast<size_t>(pending.side)];
    ++counters_.canceled[static_cast<size_t>(pending.side)];
    ++removed;
  }
  return removed;
}

std::optional<Price> LimitOrderBook::best_bid() const {
  if (bids_.empty()) return std::nullopt;
  return bids_.begin()->first;
}

std::optional<Price> LimitOrderBook::best_ask() const {
  if (asks_.empty()) return std::nullopt;
  return asks_.begin()->first;
}

std::vector<Order> LimitOrderBook::resting_orders(Side side) const {
  std::vector<Order> result;
  result.reserve(static_cast<size_t>(resting_count(side)));
  auto collect = [&](const auto& levels) {
    for (const auto& [price, level] : levels) {
      for (const Entry& entry : level) {
        result.push_back(Order{entry.id, entry.agent_id, side, price, entry.submitted_at});
      }
    }
  };
  if (side == Side::Buy) {
    collect(bids_);
  } else {
    collect(asks_);
  }
  return result;
}

}  // namespace ticksim
