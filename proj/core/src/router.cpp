#include "ticksim/router.hpp"

#include <algorithm>
#include <stdexcept>

namespace ticksim {

VolumeWindow::VolumeWindow(int64_t span, double initial_share)
    : span_(span), last_known_share_(initial_share) {
  if (span < 1) throw std::invalid_argument("volume window span must be >= 1");
  if (!(initial_share >= 0.0 && initial_share <= 1.0))
    throw std::invalid_argument("initial share must lie in [0, 1]");
  buckets_[0].assign(static_cast<size_t>(span), 0);
  buckets_[1].assign(static_cast<size_t>(span), 0);
}

void VolumeWindow::advance_to(int64_t t) {
  if (t < current_t_) throw std::invalid_argument("volume window time went backwards");
  if (t - current_t_ >= span_) {
    std::fill(buckets_[0].begin(), buckets_[0].end(), 0u);
    std::fill(buckets_[1].begin(), buckets_[1].end(), 0u);
    sums_[0] = sums_[1] = 0;
    current_t_ = t;
    return;
  }
  for (int64_t tick = current_t_ + 1; tick <= t; ++tick) {
    const auto slot = static_cast<size_t>(tick % span_);
    sums_[0] -= buckets_[0][slot];
    sums_[1] -= buckets_[1][slot];
    buckets_[0][slot] = 0;
    buckets_[1][slot] = 0;
  }
  current_t_ = t;
}

void VolumeWindow::record_trade(Market market, int64_t t) {
  advance_to(t);
  const auto m = static_cast<size_t>(market);
  ++buckets_[m][static_cast<size_t>(t % span_)];
  ++sums_[m];
}

double VolumeWindow::share_a() {
  const uint64_t total = sums_[0] + sums_[1];
  if (total > 0) {
    last_known_share_ = static_cast<double>(sums_[0]) / static_cast<double>(total);
  }
  return last_known_share_;
}

Market select_market(Side side, std::optional<Price> rounded_a,
                     std::optional<Price> rounded_b, std::optional<Price> best_opp_a,
                     std::optional<Price> best_opp_b, VolumeWindow& window, Rng& rng) {
  const auto marketable = [side](const std::optional<Price>& px,
                                 const std::optional<Price>& best) {
    if (!px || !best) return false;
    return side == Side::Buy ? *px >= *best : *px <= *best;
  };
  const bool marketable_a = marketable(rounded_a, best_opp_a);
  const bool marketable_b = marketable(rounded_b, best_opp_b);
  const bool best_prices_differ = best_opp_a != best_opp_b;

  if (best_prices_differ && (marketable_a || marketable_b)) {
    if (!best_opp_a) return Market::B;
    if (!best_opp_b) return Market::A;
    if (side == Side::Buy) return *best_opp_a < *best_opp_b ? Market::A : Market::B;
    return *best_opp_a > *best_opp_b ? Market::A : Market::B;
  }
  return rng.uniform() < window.share_a() ? Market::A : Market::B;
}

}  // namespace ticksim
