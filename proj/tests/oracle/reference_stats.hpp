#pragma once

// Independent statistics used to cross-check the metrics module. Two-pass
// accumulation in extended precision, deliberately a different route than
// the single-pass production code.

#include <cmath>
#include <span>
#include <vector>

namespace ticksim::oracle {

inline long double two_pass_mean(std::span<const double> xs) {
  long double sum = 0;
  for (const double x : xs) sum += x;
  return sum / static_cast<long double>(xs.size());
}

// Sample standard deviation (n-1 denominator).
inline long double two_pass_stddev(std::span<const double> xs) {
  const long double mean = two_pass_mean(xs);
  long double sum_sq = 0;
  for (const double x : xs) {
    const long double d = static_cast<long double>(x) - mean;
    sum_sq += d * d;
  }
  return std::sqrt(sum_sq / static_cast<long double>(xs.size() - 1));
}

inline long double excess_kurtosis(std::span<const double> xs) {
  const long double mean = two_pass_mean(xs);
  long double m2 = 0, m4 = 0;
  for (const double x : xs) {
    const long double d = static_cast<long double>(x) - mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  m2 /= static_cast<long double>(xs.size());
  m4 /= static_cast<long double>(xs.size());
  return m4 / (m2 * m2) - 3.0L;
}

inline long double autocorrelation(std::span<const double> xs, size_t lag) {
  const long double mean = two_pass_mean(xs);
  long double cov = 0, var = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const long double d = static_cast<long double>(xs[i]) - mean;
    var += d * d;
    if (i + lag < xs.size()) {
      cov += d * (static_cast<long double>(xs[i + lag]) - mean);
    }
  }
  return cov / var;
}

}  // namespace ticksim::oracle
