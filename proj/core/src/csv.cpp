#include "ticksim/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace ticksim::csv {

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string quoted;
  quoted.reserve(field.size() + 2);
  quoted.push_back('"');
  for (const char c : field) {
    if (c == '"') quoted.push_back('"');
    quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

std::string num(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string num_exact(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

Writer::Writer(const std::filesystem::path& path) : out_(path, std::ios::binary) {
  if (!out_) throw std::runtime_error("cannot open " + path.string() + " for writing");
}

void Writer::row(std::span<const std::string> fields) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << escape(fields[i]);
  }
  out_ << '\n';
  if (!out_) throw std::runtime_error("write failed");
}

void Writer::row(std::initializer_list<std::string> fields) {
  row(std::span<const std::string>(fields.begin(), fields.size()));
}

void write_prices(const std::filesystem::path& path, const SimulationOutput& output) {
  Writer w(path);
  const double pf = output.config.P_f;
  if (output.dual_market) {
    w.row({"t", "price_quanta", "price", "price_A_quanta", "price_B_quanta"});
    for (size_t i = 0; i < output.consolidated.size(); ++i) {
      w.row({std::to_string(i + 1), std::to_string(output.consolidated[i]),
             num(quanta_to_units(output.consolidated[i], pf)),
             std::to_string(output.price_a[i]), std::to_string(output.price_b[i])});
    }
  } else {
    w.row({"t", "price_quanta", "price"});
    for (size_t i = 0; i < output.consolidated.size(); ++i) {
      w.row({std::to_string(i + 1), std::to_string(output.consolidated[i]),
             num(quanta_to_units(output.consolidated[i], pf))});
    }
  }
}

void write_trades(const std::filesystem::path& path, std::span<const Trade> trades,
                  Market market, double fundamental_units) {
  Writer w(path);
  w.row({"t", "market", "price_quanta", "price", "aggressor_side", "buy_agent",
         "sell_agent"});
  const std::string market_name = to_string(market);
  for (const Trade& trade : trades) {
    w.row({std::to_string(trade.t), market_name, std::to_string(trade.price),
           num(quanta_to_units(trade.price, fundamental_units)),
           to_string(trade.aggressor), std::to_string(trade.buy_agent),
           std::to_string(trade.sell_agent)});
  }
}

void write_share(const std::filesystem::path& path,
                 std::span<const double> share_by_day) {
  Writer w(path);
  w.row({"day", "W_A"});
  for (size_t day = 0; day < share_by_day.size(); ++day) {
    w.row({std::to_string(day + 1), num(share_by_day[day])});
  }
}

void write_summary(const std::filesystem::path& path, std::span<const SummaryRow> rows) {
  Writer w(path);
  w.row({"dP_A", "dP_B", "seed", "W_A_500d", "sigma_t_pct", "exec_rate", "cancel_rate",
         "kurtosis", "acf1"});
  for (const SummaryRow& r : rows) {
    w.row({num(r.dP_A), num(r.dP_B), std::to_string(r.seed), num(r.w_a_at_day),
           num(r.sigma_t_pct), num(r.exec_rate), num(r.cancel_rate), num(r.kurtosis),
           num(r.acf1)});
  }
}

void write_population(const std::filesystem::path& path,
                      std::span<const AgentProfile> population) {
  Writer w(path);
  w.row({"agent_id", "w1", "w2", "w3", "tau"});
  for (const AgentProfile& agent : population) {
    w.row({std::to_string(agent.id), num_exact(agent.fundamental_weight),
           num_exact(agent.technical_weight), num_exact(agent.noise_weight),
           std::to_string(agent.lookback)});
  }
}

}  // namespace ticksim::csv
