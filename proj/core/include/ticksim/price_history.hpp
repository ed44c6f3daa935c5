#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ticksim {

// Ring buffer of the consolidated per-tick price, sized for the longest
// technical lookback. Index 0 holds the pre-open price (the fundamental);
// index t holds the price recorded after tick t.
class PriceHistory {
 public:
  PriceHistory(int64_t capacity, double initial_price)
      : buffer_(static_cast<size_t>(capacity), 0.0) {
    if (capacity < 1) throw std::invalid_argument("history capacity must be >= 1");
    if (!(initial_price > 0.0))
      throw std::invalid_argument("initial price must be positive");
    buffer_[0] = initial_price;
  }

  void append(double price) {
    ++last_;
    buffer_[static_cast<size_t>(last_ % capacity())] = price;
  }

  // Latest recorded price: the prevailing price an agent sees next tick.
  double current() const {
    return buffer_[static_cast<size_t>(last_ % capacity())];
  }

  int64_t last_tick() const { return last_; }

  double at(int64_t tick_index) const {
    if (tick_index < 0 || tick_index > last_ || tick_index <= last_ - capacity()) {
      throw std::out_of_range("price history index " + std::to_string(tick_index) +
                              " outside retained window ending at " +
                              std::to_string(last_));
    }
    return buffer_[static_cast<size_t>(tick_index % capacity())];
  }

  int64_t capacity() const { return static_cast<int64_t>(buffer_.size()); }

 private:
  std::vector<double> buffer_;
  int64_t last_ = 0;
};

}  // namespace ticksim
