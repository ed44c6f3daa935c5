// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails. Criteria can be selected
// by number on the command line (default: all).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/naive_book.hpp"
#include "ticksim/csv.hpp"
#include "ticksim/engine.hpp"
#include "ticksim/metrics.hpp"
#include "ticksim/sweep.hpp"

using namespace ticksim;
namespace fs = std::filesystem;

namespace {

struct CriterionResult {
  bool pass = false;
  std::string detail;
};

// Paper parameter set: n=1000, w_max=(1,10,1), tau_max=10000, sigma_eps=0.06,
// P_sigma=30, t_c=20000, P_f=10000, t_AB=10000, initial W_A=0.9. Runs use the
// 500-day horizon (10^6 ticks at 2000 ticks per day).
ScenarioConfig paper_config() {
  ScenarioConfig config;
  config.total_steps = 1'000'000;
  return config;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double mean(const std::vector<double>& values) {
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

std::vector<SummaryRow> run_seeds(ScenarioConfig base, uint64_t first_seed, int count,
                                  int64_t day = 500) {
  std::vector<RunTask> tasks;
  for (int i = 0; i < count; ++i) {
    RunTask task;
    task.config = base;
    task.config.seed = first_seed + static_cast<uint64_t>(i);
    task.options.record_trades = false;
    task.measurement_day = day;
    tasks.push_back(task);
  }
  return run_summaries(tasks, 0);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

// 1. Baseline volatility: fine equal ticks, sigma_t in [0.025%, 0.10%],
//    three seeds, each full run under 60 s.
CriterionResult baseline_volatility() {
  ScenarioConfig config = paper_config();
  config.dP_A = 0.0001;
  config.dP_B = 0.0001;

  const auto start = std::chrono::steady_clock::now();
  const std::vector<SummaryRow> rows = run_seeds(config, 1, 3);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::vector<double> sigmas;
  for (const SummaryRow& row : rows) {
    if (!row.error.empty()) return {false, "run failed: " + row.error};
    sigmas.push_back(row.sigma_t_pct);
  }
  const double sigma_bar = mean(sigmas);
  const double per_run = elapsed / 3.0 * 2.0;  // two runs share each core
  const bool in_band = sigma_bar >= 0.025 && sigma_bar <= 0.10;
  const bool fast_enough = per_run < 60.0;
  return {in_band && fast_enough,
          "sigma_t = " + fmt(sigma_bar) + "% over seeds {" + fmt(sigmas[0]) + ", " +
              fmt(sigmas[1]) + ", " + fmt(sigmas[2]) + "}, target [0.025%, 0.10%]; " +
              fmt(per_run) + " s per run (limit 60 s)"};
}

// 2-4. Share evolution scenarios at day 500, median over 5 seeds.
CriterionResult share_scenario(double dpa, double dpb, bool expect_high,
                               double threshold) {
  ScenarioConfig config = paper_config();
  config.dP_A = dpa;
  config.dP_B = dpb;
  const std::vector<SummaryRow> rows = run_seeds(config, 1, 5);
  std::vector<double> shares;
  for (const SummaryRow& row : rows) {
    if (!row.error.empty()) return {false, "run failed: " + row.error};
    shares.push_back(row.w_a_at_day);
  }
  const double w_a = median(shares);
  const bool pass = expect_high ? w_a >= threshold : w_a <= threshold;
  std::string detail = "median W_A(500d) = " + fmt(w_a) + " (seeds:";
  for (const double s : shares) detail += " " + fmt(s);
  detail += "), required " + std::string(expect_high ? ">= " : "<= ") + fmt(threshold);
  return {pass, detail};
}

// 5. Borderline structure over the default decade grid, 3 seeds per cell.
CriterionResult borderline_structure() {
  SweepSpec spec;
  spec.base = paper_config();
  spec.seeds_per_cell = 3;
  spec.measurement_day = 500;
  spec.dpa_list = SweepSpec::default_grid();
  spec.dpb_list = SweepSpec::default_grid();

  const BorderlineReport report = compute_sweep(spec, 0);
  if (!std::isfinite(report.sigma_bar_pct)) {
    return {false, "reference run failed to produce sigma_bar"};
  }

  int correct = 0, total = 0, failed_runs = 0;
  std::string worst;
  for (const CellResult& cell : report.cells) {
    if (!cell.errors.empty()) {
      ++failed_runs;
      continue;
    }
    ++total;
    const bool protected_cell = report.tick_protected(cell);
    const bool ok = protected_cell ? cell.w_a_mean >= 0.6 : cell.w_a_mean <= 0.5;
    if (ok) {
      ++correct;
    } else if (worst.empty()) {
      worst = " e.g. dP_A=" + fmt(cell.dP_A) + " dP_B=" + fmt(cell.dP_B) + " W_A=" +
              fmt(cell.w_a_mean) + (protected_cell ? " (protected)" : " (unprotected)");
    }
  }
  const double fraction = total > 0 ? static_cast<double>(correct) / total : 0.0;
  return {fraction >= 0.90 && failed_runs == 0,
          fmt(100.0 * fraction) + "% of " + std::to_string(total) +
              " cells classified correctly (need >= 90%), sigma_bar = " +
              fmt(report.sigma_bar_pct) + "%" + worst};
}

// 6. Volatility curve: flat left branch, rising right branch. The curve's
//    sigma_t is the realized price-change volatility of market A (a per-tick
//    carry-forward measure cannot rise once market A stops trading); the
//    baseline sigma_bar is the per-tick one-tick volatility at the finest tick.
CriterionResult volatility_curve() {
  SweepSpec spec;
  spec.base = paper_config();
  spec.base.dP_B = 0.0001;
  spec.dpa_list = {0.0001, 0.001, 0.05, 0.1};
  spec.seeds_per_cell = 3;
  spec.measurement_day = 500;

  const VolCurve curve = compute_vol_curve(spec, 0);
  const auto point_at = [&](double dpa) {
    for (const VolCurvePoint& p : curve.points) {
      if (p.dP_A == dpa) return p;
    }
    return VolCurvePoint{dpa, std::numeric_limits<double>::quiet_NaN(),
                         std::numeric_limits<double>::quiet_NaN(),
                         std::numeric_limits<double>::quiet_NaN()};
  };
  const double s_fine = point_at(0.0001).move_sigma_pct;
  const double s_mid = point_at(0.001).move_sigma_pct;
  const double s_half = point_at(0.05).move_sigma_pct;
  const double s_coarse = point_at(0.1).move_sigma_pct;
  const double sigma_bar = point_at(0.0001).sigma_t_pct;

  const bool flat_left = std::max(s_fine, s_mid) / std::min(s_fine, s_mid) < 1.2;
  const bool coarse_elevated = s_coarse > 2.0 * sigma_bar;
  const bool monotone_right = s_coarse >= s_half;
  return {flat_left && coarse_elevated && monotone_right,
          "price-change sigma(%) = {" + fmt(s_fine) + ", " + fmt(s_mid) + ", " +
              fmt(s_half) + ", " + fmt(s_coarse) +
              "} at dP_A = {0.0001, 0.001, 0.05, 0.1}%; left ratio " +
              fmt(std::max(s_fine, s_mid) / std::min(s_fine, s_mid)) +
              " (< 1.2), sigma(0.1%) vs 2*sigma_bar = " + fmt(2.0 * sigma_bar) + "%"};
}

// 7. Stylized facts of a single fine-tick market at the 100-tick scale.
CriterionResult stylized() {
  ScenarioConfig config = paper_config();
  config.dP_A = 0.0001;
  config.dP_B = 0.0001;
  config.seed = 2;
  RunOptions options;
  options.dual_market = false;
  options.record_trades = false;
  const SimulationOutput output = Simulation::run(config, options);
  const StylizedFacts facts = stylized_facts(
      ReturnSeries::from_prices(output.consolidated, "consolidated"), 100);
  const double bound = 2.0 / std::sqrt(static_cast<double>(facts.sample_count));
  const bool pass =
      facts.excess_kurtosis > 0.0 && facts.squared_return_acf.front() > bound;
  return {pass, "excess kurtosis = " + fmt(facts.excess_kurtosis) +
                    " (> 0), ACF1(squared) = " + fmt(facts.squared_return_acf.front()) +
                    " (> " + fmt(bound) + ")"};
}

// 8. Matching-oracle equivalence on 10^4 random one-share orders.
CriterionResult matching_oracle() {
  const Price tick = 10;
  const int64_t lifetime = 3000;
  LimitOrderBook book(tick, lifetime);
  oracle::NaiveBook naive(tick, lifetime);
  Rng rng(20240229);
  uint64_t id = 1;
  int64_t submitted = 0;
  for (int64_t t = 1; submitted < 10000; ++t) {
    if (book.purge_expired(t) != naive.purge_expired(t)) {
      return {false, "purge diverged at t = " + std::to_string(t)};
    }
    const Side side = rng.uniform() < 0.5 ? Side::Buy : Side::Sell;
    const auto px = round_to_tick(rng.normal(1.0e7, 25000.0), side, tick);
    if (!px) continue;
    const Order order{id++, static_cast<uint32_t>(1 + t % 997), side, *px, t};
    book.submit(order);
    naive.submit(order);
    ++submitted;
  }
  if (book.trade_log().size() != naive.trade_log().size()) {
    return {false, "trade counts differ: " + std::to_string(book.trade_log().size()) +
                       " vs " + std::to_string(naive.trade_log().size())};
  }
  for (size_t i = 0; i < book.trade_log().size(); ++i) {
    if (!(book.trade_log()[i] == naive.trade_log()[i])) {
      return {false, "trade " + std::to_string(i) + " differs"};
    }
  }
  return {true, std::to_string(book.trade_log().size()) +
                    " trades from 10000 orders identical to the rescan matcher"};
}

// 9. Determinism: byte-identical trade logs and summary CSVs.
CriterionResult determinism() {
  ScenarioConfig config = paper_config();
  config.dP_A = 0.01;
  config.dP_B = 0.001;
  config.total_steps = 200000;
  config.seed = 77;

  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  };

  const fs::path base = fs::temp_directory_path() / "ticksim_acceptance_det";
  fs::remove_all(base);
  for (const char* leg : {"first", "second"}) {
    const SimulationOutput output = Simulation::run(config);
    const SummaryRow row = summarize(output);
    const fs::path dir = base / leg;
    fs::create_directories(dir);
    csv::write_trades(dir / "trades_A.csv", output.trades_a, Market::A, config.P_f);
    csv::write_trades(dir / "trades_B.csv", output.trades_b, Market::B, config.P_f);
    csv::write_summary(dir / "summary.csv", std::span<const SummaryRow>(&row, 1));
  }
  for (const char* name : {"trades_A.csv", "trades_B.csv", "summary.csv"}) {
    if (slurp(base / "first" / name) != slurp(base / "second" / name)) {
      return {false, std::string(name) + " differs between identical runs"};
    }
  }
  return {true, "trade logs and summary CSVs byte-identical across reruns"};
}

// 10. Mean reversion: long single-market run stays anchored to P_f.
CriterionResult mean_reversion() {
  ScenarioConfig config = paper_config();
  config.dP_A = 0.0001;
  config.dP_B = 0.0001;
  config.seed = 3;
  RunOptions options;
  options.dual_market = false;
  options.record_trades = false;
  const SimulationOutput output = Simulation::run(config, options);
  double sum = 0.0;
  for (const Price p : output.consolidated) {
    sum += std::log(static_cast<double>(p) / static_cast<double>(kQuantaPerFundamental));
  }
  const double avg = sum / static_cast<double>(output.consolidated.size());
  return {std::abs(avg) < 0.05,
          "time-average of ln(P/P_f) = " + fmt(avg) + ", required |avg| < 0.05"};
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* name;
    std::function<CriterionResult()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "baseline volatility", baseline_volatility},
      {2, "equal-tick stability",
       [] { return share_scenario(0.01, 0.01, true, 0.7); }},
      {3, "share capture by the finer market",
       [] { return share_scenario(0.1, 0.01, false, 0.5); }},
      {4, "small-tick immunity",
       [] { return share_scenario(0.001, 0.0001, true, 0.7); }},
      {5, "borderline structure on the tick grid", borderline_structure},
      {6, "volatility curve", volatility_curve},
      {7, "stylized facts", stylized},
      {8, "matching-oracle equivalence", matching_oracle},
      {9, "determinism", determinism},
      {10, "mean reversion", mean_reversion},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), criterion.id) == selected.end()) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    try {
      result = criterion.run();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s — %s (%.1f s)\n",
                result.pass ? "PASS" : "FAIL", criterion.id, criterion.name,
                result.detail.c_str(), elapsed);
    std::fflush(stdout);
    if (!result.pass) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
