#pragma once

#include <cstdint>

#include "ticksim/price.hpp"

namespace ticksim {

enum class Market : uint8_t { A, B };

inline const char* to_string(Market m) { return m == Market::A ? "A" : "B"; }

// A one-share limit intent. Quantity is always a single share, so it carries
// no quantity field.
struct Order {
  uint64_t id = 0;          // unique, strictly increasing with submission time
  uint32_t agent_id = 0;    // 1..n
  Side side = Side::Buy;
  Price price = 0;          // on the destination market's tick grid
  int64_t submitted_at = 0; // tick-time
};

struct Trade {
  int64_t t = 0;
  Price price = 0;
  Side aggressor = Side::Buy;
  uint32_t buy_agent = 0;
  uint32_t sell_agent = 0;
  uint64_t buy_order_id = 0;
  uint64_t sell_order_id = 0;
};

inline bool operator==(const Trade& a, const Trade& b) {
  return a.t == b.t && a.price == b.price && a.aggressor == b.aggressor &&
         a.buy_agent == b.buy_agent && a.sell_agent == b.sell_agent &&
         a.buy_order_id == b.buy_order_id && a.sell_order_id == b.sell_order_id;
}

struct ExecutionReport {
  enum class Kind : uint8_t { Filled, Rested };
  Kind kind = Kind::Rested;
  Price price = 0;  // fill price when Filled, resting limit price when Rested

  bool filled() const { return kind == Kind::Filled; }
};

}  // namespace ticksim
