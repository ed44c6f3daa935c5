#pragma once

#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ticksim/engine.hpp"
#include "ticksim/metrics.hpp"

namespace ticksim::csv {

// RFC-4180-style quoting: fields containing commas, quotes or newlines are
// wrapped in double quotes with embedded quotes doubled.
std::string escape(std::string_view field);

// Stable textual forms (fixed format, no locale) so identical runs produce
// byte-identical files.
std::string num(double value);        // %.12g
std::string num_exact(double value);  // %.17g, round-trips a double

class Writer {
 public:
  explicit Writer(const std::filesystem::path& path);
  void row(std::span<const std::string> fields);
  void row(std::initializer_list<std::string> fields);

 private:
  std::ofstream out_;
};

void write_prices(const std::filesystem::path& path, const SimulationOutput& output);
void write_trades(const std::filesystem::path& path, std::span<const Trade> trades,
                  Market market, double fundamental_units);
void write_share(const std::filesystem::path& path, std::span<const double> share_by_day);
void write_summary(const std::filesystem::path& path, std::span<const SummaryRow> rows);
void write_population(const std::filesystem::path& path,
                      std::span<const AgentProfile> population);

}  // namespace ticksim::csv
