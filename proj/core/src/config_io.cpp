#include "ticksim/config_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ticksim {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct KeyValue {
  std::string key;
  std::string value;
  int line;
};

std::vector<KeyValue> parse_key_values(const std::string& text,
                                       const std::string& origin) {
  std::vector<KeyValue> pairs;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(origin + ":" + std::to_string(line_no) +
                                  ": expected 'key = value', got '" + stripped + "'");
    }
    pairs.push_back(KeyValue{trim(stripped.substr(0, eq)),
                             trim(stripped.substr(eq + 1)), line_no});
  }
  return pairs;
}

double parse_double(const KeyValue& kv, const std::string& origin) {
  size_t used = 0;
  double value = 0;
  try {
    value = std::stod(kv.value, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != kv.value.size() || kv.value.empty()) {
    throw std::invalid_argument(origin + ":" + std::to_string(kv.line) + ": key '" +
                                kv.key + "' has non-numeric value '" + kv.value + "'");
  }
  return value;
}

int64_t parse_int(const KeyValue& kv, const std::string& origin) {
  size_t used = 0;
  int64_t value = 0;
  try {
    value = std::stoll(kv.value, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != kv.value.size() || kv.value.empty()) {
    throw std::invalid_argument(origin + ":" + std::to_string(kv.line) + ": key '" +
                                kv.key + "' has non-integer value '" + kv.value + "'");
  }
  return value;
}

uint64_t parse_uint(const KeyValue& kv, const std::string& origin) {
  const int64_t v = parse_int(kv, origin);
  if (v < 0) {
    throw std::invalid_argument(origin + ":" + std::to_string(kv.line) + ": key '" +
                                kv.key + "' must be non-negative");
  }
  return static_cast<uint64_t>(v);
}

std::vector<double> parse_double_list(const KeyValue& kv, const std::string& origin) {
  std::vector<double> values;
  std::istringstream in(kv.value);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::string stripped = trim(item);
    if (stripped.empty()) {
      throw std::invalid_argument(origin + ":" + std::to_string(kv.line) + ": key '" +
                                  kv.key + "' has an empty list element");
    }
    values.push_back(parse_double(KeyValue{kv.key, stripped, kv.line}, origin));
  }
  if (values.empty()) {
    throw std::invalid_argument(origin + ":" + std::to_string(kv.line) + ": key '" +
                                kv.key + "' has an empty list");
  }
  return values;
}

// Returns true when the key belonged to the scenario.
bool apply_scenario_key(ScenarioConfig& config, const KeyValue& kv,
                        const std::string& origin) {
  if (kv.key == "n") config.n = parse_int(kv, origin);
  else if (kv.key == "w1_max") config.w1_max = parse_double(kv, origin);
  else if (kv.key == "w2_max") config.w2_max = parse_double(kv, origin);
  else if (kv.key == "w3_max") config.w3_max = parse_double(kv, origin);
  else if (kv.key == "tau_max") config.tau_max = parse_int(kv, origin);
  else if (kv.key == "sigma_eps") config.sigma_eps = parse_double(kv, origin);
  else if (kv.key == "P_sigma") config.P_sigma = parse_double(kv, origin);
  else if (kv.key == "t_c") config.t_c = parse_int(kv, origin);
  else if (kv.key == "P_f") config.P_f = parse_double(kv, origin);
  else if (kv.key == "t_AB") config.t_AB = parse_int(kv, origin);
  else if (kv.key == "dP_A") config.dP_A = parse_double(kv, origin);
  else if (kv.key == "dP_B") config.dP_B = parse_double(kv, origin);
  else if (kv.key == "initial_W_A") config.initial_W_A = parse_double(kv, origin);
  else if (kv.key == "total_steps") config.total_steps = parse_int(kv, origin);
  else if (kv.key == "ticks_per_day") config.ticks_per_day = parse_int(kv, origin);
  else if (kv.key == "seed") config.seed = parse_uint(kv, origin);
  else return false;
  return true;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

ScenarioConfig parse_scenario_text(const std::string& text, const std::string& origin) {
  ScenarioConfig config;
  for (const KeyValue& kv : parse_key_values(text, origin)) {
    if (!apply_scenario_key(config, kv, origin)) {
      throw std::invalid_argument(origin + ":" + std::to_string(kv.line) +
                                  ": unknown key '" + kv.key + "'");
    }
  }
  config.validate();
  return config;
}

ScenarioConfig parse_scenario_file(const std::filesystem::path& path) {
  return parse_scenario_text(read_file(path), path.string());
}

SweepSpec parse_sweep_text(const std::string& text, const std::string& origin) {
  SweepSpec spec;
  spec.dpa_list = SweepSpec::default_grid();
  spec.dpb_list = SweepSpec::default_grid();
  for (const KeyValue& kv : parse_key_values(text, origin)) {
    if (apply_scenario_key(spec.base, kv, origin)) continue;
    if (kv.key == "dP_A_list") spec.dpa_list = parse_double_list(kv, origin);
    else if (kv.key == "dP_B_list") spec.dpb_list = parse_double_list(kv, origin);
    else if (kv.key == "seeds_per_cell") spec.seeds_per_cell = parse_int(kv, origin);
    else if (kv.key == "measurement_day") spec.measurement_day = parse_int(kv, origin);
    else {
      throw std::invalid_argument(origin + ":" + std::to_string(kv.line) +
                                  ": unknown key '" + kv.key + "'");
    }
  }
  spec.validate();
  return spec;
}

SweepSpec parse_sweep_file(const std::filesystem::path& path) {
  return parse_sweep_text(read_file(path), path.string());
}

void SweepSpec::validate() const {
  base.validate();
  if (dpa_list.empty() || dpb_list.empty())
    throw std::invalid_argument("sweep tick-size lists must be non-empty");
  for (const double dp : dpa_list) tick_from_percent(dp);
  for (const double dp : dpb_list) tick_from_percent(dp);
  if (seeds_per_cell < 1) throw std::invalid_argument("seeds_per_cell must be >= 1");
  if (measurement_day < 1) throw std::invalid_argument("measurement_day must be >= 1");
}

std::vector<double> SweepSpec::default_grid() {
  return {0.0001, 0.0002, 0.0005, 0.001, 0.002, 0.005, 0.01, 0.02, 0.05, 0.1};
}

std::string scenario_to_text(const ScenarioConfig& config) {
  std::ostringstream out;
  const auto num = [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  out << "n = " << config.n << '\n'
      << "w1_max = " << num(config.w1_max) << '\n'
      << "w2_max = " << num(config.w2_max) << '\n'
      << "w3_max = " << num(config.w3_max) << '\n'
      << "tau_max = " << config.tau_max << '\n'
      << "sigma_eps = " << num(config.sigma_eps) << '\n'
      << "P_sigma = " << num(config.P_sigma) << '\n'
      << "t_c = " << config.t_c << '\n'
      << "P_f = " << num(config.P_f) << '\n'
      << "t_AB = " << config.t_AB << '\n'
      << "dP_A = " << num(config.dP_A) << '\n'
      << "dP_B = " << num(config.dP_B) << '\n'
      << "initial_W_A = " << num(config.initial_W_A) << '\n'
      << "total_steps = " << config.total_steps << '\n'
      << "ticks_per_day = " << config.ticks_per_day << '\n'
      << "seed = " << config.seed << '\n';
  return out.str();
}

}  // namespace ticksim
