#pragma once

#include <cstdint>
#include <optional>

namespace ticksim {

// Prices live on an integer grid of "quanta". One quantum is 1e-7 of the
// fundamental price, so the fundamental is always 10'000'000 quanta and every
// tick size in the 0.0001%..0.1% range is an exact integer.
using Price = int64_t;

inline constexpr Price kQuantaPerFundamental = 10'000'000;

enum class Side : uint8_t { Buy, Sell };

inline const char* to_string(Side s) { return s == Side::Buy ? "buy" : "sell"; }

inline Side opposite(Side s) { return s == Side::Buy ? Side::Sell : Side::Buy; }

// Converts a tick size expressed as a percentage of the fundamental price
// into quanta. Throws std::invalid_argument when the percentage does not land
// exactly on the quantum grid (or is not positive).
Price tick_from_percent(double percent_of_fundamental);

// Snaps a raw (real-valued) price in quanta onto the tick grid without ever
// making the order more aggressive than intended: buys round down, sells
// round up. Returns nullopt when a buy would round to zero or below.
std::optional<Price> round_to_tick(double raw_price, Side side, Price tick);

// Quanta <-> natural price units (the units the fundamental price is quoted
// in, e.g. fundamental_units = 10000).
double quanta_to_units(Price quanta, double fundamental_units);
double units_to_quanta(double units, double fundamental_units);

}  // namespace ticksim
