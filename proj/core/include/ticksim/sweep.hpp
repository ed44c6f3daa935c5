#pragma once

#include <filesystem>
#include <vector>

#include "ticksim/config_io.hpp"
#include "ticksim/engine.hpp"
#include "ticksim/metrics.hpp"

namespace ticksim {

// One simulation to execute and condense into a SummaryRow.
struct RunTask {
  ScenarioConfig config;
  RunOptions options;
  int64_t measurement_day = 500;
};

// Executes tasks across `jobs` worker threads (hardware concurrency when
// jobs <= 0). Each task owns its simulation and generator, so results do not
// depend on scheduling; a failed task yields a row with `error` set.
std::vector<SummaryRow> run_summaries(const std::vector<RunTask>& tasks, int jobs);

// Per-cell aggregate of a tick-size grid sweep. The protection flags are
// derived on demand from the cell's parameters, never stored.
struct CellResult {
  double dP_A = 0;
  double dP_B = 0;
  std::vector<double> w_a_by_seed;
  double w_a_mean = 0;
  double sigma_t_pct_mean = 0;
  std::vector<std::string> errors;  // one per failed seed

  bool satisfies_eq5() const { return dP_A <= dP_B; }
};

struct BorderlineReport {
  double sigma_bar_pct = 0;  // one-tick volatility of the fine-tick reference run
  std::vector<CellResult> cells;
  std::vector<SummaryRow> runs;  // every individual (cell, seed) row

  bool satisfies_eq6(const CellResult& cell) const {
    return cell.dP_A < sigma_bar_pct;
  }
  bool tick_protected(const CellResult& cell) const {
    return cell.satisfies_eq5() || satisfies_eq6(cell);
  }
};

struct VolCurvePoint {
  double dP_A = 0;
  double sigma_t_pct = 0;       // per-tick volatility of market A (carry-forward)
  double move_sigma_pct = 0;    // realized price-change volatility of market A
  double w_a = 0;
};

struct VolCurve {
  double dP_B = 0;
  std::vector<VolCurvePoint> points;  // ordered as the input list
};

// Runs one scenario and writes prices.csv, trades_A.csv, trades_B.csv,
// share.csv, summary.csv, population.csv, config.cfg and
// share_evolution.svg into out_dir. Returns the summary row.
SummaryRow run_scenario(const ScenarioConfig& config,
                        const std::filesystem::path& out_dir);

// Grid sweep. Cell (dP_A, dP_B) runs seeds base.seed + 0..seeds_per_cell-1;
// W_A is read at the measurement day and averaged across seeds. The eq-6
// borderline volatility comes from one extra reference run with both ticks
// at the finest grid value.
BorderlineReport compute_sweep(const SweepSpec& spec, int jobs);

// compute_sweep plus summary.csv, borderline.csv and grid_heatmap.svg.
BorderlineReport run_sweep(const SweepSpec& spec, int jobs,
                           const std::filesystem::path& out_dir);

// Volatility-vs-tick-size curve over spec.dpa_list with dP_B fixed at
// spec.base.dP_B, seeds averaged per point.
VolCurve compute_vol_curve(const SweepSpec& spec, int jobs);

// compute_vol_curve plus vol_curve.csv and vol_curve.svg.
VolCurve run_volatility_curve(const SweepSpec& spec, int jobs,
                              const std::filesystem::path& out_dir);

}  // namespace ticksim
