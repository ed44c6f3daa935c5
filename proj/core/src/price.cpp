#include "ticksim/price.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ticksim {

Price tick_from_percent(double percent_of_fundamental) {
  if (!(percent_of_fundamental > 0.0)) {
    throw std::invalid_argument("tick size must be positive, got " +
                                std::to_string(percent_of_fundamental));
  }
  const double exact =
      percent_of_fundamental / 100.0 * static_cast<double>(kQuantaPerFundamental);
  const double rounded = std::round(exact);
  if (rounded < 1.0 || std::abs(exact - rounded) > 1e-6 * rounded) {
    throw std::invalid_argument("tick size " + std::to_string(percent_of_fundamental) +
                                "% is not an integer number of price quanta");
  }
  return static_cast<Price>(rounded);
}

std::optional<Price> round_to_tick(double raw_price, Side side, Price tick) {
  if (!(raw_price > 0.0)) throw std::invalid_argument("raw price must be positive");
  if (tick <= 0) throw std::invalid_argument("tick must be positive");
  if (!(raw_price < 9.0e18)) throw std::invalid_argument("raw price out of range");

  const double quotient = raw_price / static_cast<double>(tick);
  Price snapped;
  if (side == Side::Buy) {
    snapped = static_cast<Price>(std::floor(quotient)) * tick;
    // Enforce the floor contract exactly even when the division was inexact.
    while (static_cast<double>(snapped) > raw_price) snapped -= tick;
    while (static_cast<double>(snapped + tick) <= raw_price) snapped += tick;
    if (snapped <= 0) return std::nullopt;
  } else {
    snapped = static_cast<Price>(std::ceil(quotient)) * tick;
    while (static_cast<double>(snapped) < raw_price) snapped += tick;
    while (snapped - tick > 0 && static_cast<double>(snapped - tick) >= raw_price)
      snapped -= tick;
  }
  return snapped;
}

double quanta_to_units(Price quanta, double fundamental_units) {
  return static_cast<double>(quanta) * fundamental_units /
         static_cast<double>(kQuantaPerFundamental);
}

double units_to_quanta(double units, double fundamental_units) {
  return units * static_cast<double>(kQuantaPerFundamental) / fundamental_units;
}

}  // namespace ticksim
