#include "ticksim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "ticksim/csv.hpp"
#include "ticksim/svg_plot.hpp"

namespace ticksim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 2;
}

double mean_of(const std::vector<double>& values) {
  if (values.empty()) return kNaN;
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec && !std::filesystem::is_directory(dir)) {
    throw std::runtime_error("cannot create output directory " + dir.string() + ": " +
                             ec.message());
  }
}

template <typename Fn>
void parallel_for_index(size_t count, int jobs, Fn&& fn) {
  std::atomic<size_t> next{0};
  const int workers =
      std::min<int>(resolve_jobs(jobs), static_cast<int>(std::max<size_t>(count, 1)));
  auto worker = [&] {
    for (;;) {
      const size_t index = next.fetch_add(1);
      if (index >= count) return;
      fn(index);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
}

SummaryRow failed_row(const RunTask& task, const char* what) {
  SummaryRow failed;
  failed.dP_A = task.config.dP_A;
  failed.dP_B = task.config.dP_B;
  failed.seed = task.config.seed;
  failed.w_a_at_day = kNaN;
  failed.sigma_t_pct = kNaN;
  failed.exec_rate = kNaN;
  failed.cancel_rate = kNaN;
  failed.kurtosis = kNaN;
  failed.acf1 = kNaN;
  failed.error = what;
  return failed;
}

}  // namespace

std::vector<SummaryRow> run_summaries(const std::vector<RunTask>& tasks, int jobs) {
  std::vector<SummaryRow> rows(tasks.size());
  parallel_for_index(tasks.size(), jobs, [&](size_t index) {
    const RunTask& task = tasks[index];
    try {
      const SimulationOutput output = Simulation::run(task.config, task.options);
      rows[index] = summarize(output, task.measurement_day);
    } catch (const std::exception& e) {
      rows[index] = failed_row(task, e.what());
    }
  });
  return rows;
}

SummaryRow run_scenario(const ScenarioConfig& config,
                        const std::filesystem::path& out_dir) {
  config.validate();
  ensure_dir(out_dir);

  const SimulationOutput output = Simulation::run(config);
  const SummaryRow row = summarize(output);

  csv::write_prices(out_dir / "prices.csv", output);
  csv::write_trades(out_dir / "trades_A.csv", output.trades_a, Market::A, config.P_f);
  csv::write_trades(out_dir / "trades_B.csv", output.trades_b, Market::B, config.P_f);
  csv::write_share(out_dir / "share.csv", output.share_by_day);
  csv::write_summary(out_dir / "summary.csv", std::span<const SummaryRow>(&row, 1));
  csv::write_population(out_dir / "population.csv", output.population);
  {
    std::ofstream cfg(out_dir / "config.cfg", std::ios::binary);
    cfg << scenario_to_text(config);
  }

  svgplot::Series share_series;
  share_series.label = "W_A";
  share_series.color = "#d62728";
  share_series.x.reserve(output.share_by_day.size());
  share_series.y = output.share_by_day;
  for (size_t day = 1; day <= output.share_by_day.size(); ++day) {
    share_series.x.push_back(static_cast<double>(day));
  }
  svgplot::ChartOptions options;
  options.title = "Trading-volume share of market A";
  options.x_label = "day";
  options.y_label = "W_A";
  options.y_min = 0.0;
  options.y_max = 1.0;
  svgplot::write_line_chart(out_dir / "share_evolution.svg", {share_series}, options);
  return row;
}

BorderlineReport compute_sweep(const SweepSpec& spec, int jobs) {
  spec.validate();

  const double finest =
      std::min(*std::min_element(spec.dpa_list.begin(), spec.dpa_list.end()),
               *std::min_element(spec.dpb_list.begin(), spec.dpb_list.end()));

  std::vector<RunTask> tasks;
  RunOptions options;
  options.record_trades = false;  // summaries only

  // Task 0: the fine-tick reference run that measures the borderline
  // volatility; the grid cells follow in row-major order, seeds innermost.
  RunTask reference;
  reference.config = spec.base;
  reference.config.dP_A = finest;
  reference.config.dP_B = finest;
  reference.options = options;
  reference.measurement_day = spec.measurement_day;
  tasks.push_back(reference);

  for (const double dpa : spec.dpa_list) {
    for (const double dpb : spec.dpb_list) {
      for (int64_t s = 0; s < spec.seeds_per_cell; ++s) {
        RunTask task;
        task.config = spec.base;
        task.config.dP_A = dpa;
        task.config.dP_B = dpb;
        task.config.seed = spec.base.seed + static_cast<uint64_t>(s);
        task.options = options;
        task.measurement_day = spec.measurement_day;
        tasks.push_back(task);
      }
    }
  }

  const std::vector<SummaryRow> rows = run_summaries(tasks, jobs);

  BorderlineReport report;
  report.sigma_bar_pct = rows.front().sigma_t_pct;
  report.runs.assign(rows.begin() + 1, rows.end());

  size_t index = 1;
  for (const double dpa : spec.dpa_list) {
    for (const double dpb : spec.dpb_list) {
      CellResult cell;
      cell.dP_A = dpa;
      cell.dP_B = dpb;
      std::vector<double> sigmas;
      for (int64_t s = 0; s < spec.seeds_per_cell; ++s, ++index) {
        const SummaryRow& row = rows[index];
        if (!row.error.empty()) {
          cell.errors.push_back(row.error);
          continue;
        }
        cell.w_a_by_seed.push_back(row.w_a_at_day);
        sigmas.push_back(row.sigma_t_pct);
      }
      cell.w_a_mean = mean_of(cell.w_a_by_seed);
      cell.sigma_t_pct_mean = mean_of(sigmas);
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

BorderlineReport run_sweep(const SweepSpec& spec, int jobs,
                           const std::filesystem::path& out_dir) {
  ensure_dir(out_dir);
  const BorderlineReport report = compute_sweep(spec, jobs);

  csv::write_summary(out_dir / "summary.csv", report.runs);
  {
    csv::Writer w(out_dir / "borderline.csv");
    w.row({"dP_A", "dP_B", "W_A_mean", "sigma_t_pct_mean", "eq5", "eq6",
           "sigma_bar_pct", "failed_seeds"});
    for (const CellResult& cell : report.cells) {
      w.row({csv::num(cell.dP_A), csv::num(cell.dP_B), csv::num(cell.w_a_mean),
             csv::num(cell.sigma_t_pct_mean), cell.satisfies_eq5() ? "1" : "0",
             report.satisfies_eq6(cell) ? "1" : "0", csv::num(report.sigma_bar_pct),
             std::to_string(cell.errors.size())});
    }
  }

  svgplot::Heatmap heatmap;
  heatmap.title = "W_A at day " + std::to_string(spec.measurement_day) +
                  " (dashed: equal ticks, solid: reference volatility)";
  heatmap.x_label = "tick size of market B, % of fundamental";
  heatmap.y_label = "tick size of market A, % of fundamental";
  heatmap.x_values = spec.dpb_list;
  heatmap.y_values = spec.dpa_list;
  heatmap.values.assign(spec.dpa_list.size(),
                        std::vector<double>(spec.dpb_list.size(), kNaN));
  size_t cell_index = 0;
  for (size_t i = 0; i < spec.dpa_list.size(); ++i) {
    for (size_t j = 0; j < spec.dpb_list.size(); ++j, ++cell_index) {
      heatmap.values[i][j] = report.cells[cell_index].w_a_mean;
    }
  }
  heatmap.draw_diagonal = true;
  if (std::isfinite(report.sigma_bar_pct)) {
    heatmap.horizontal_line = report.sigma_bar_pct;
  }
  heatmap.legend_low = "W_A = 0";
  heatmap.legend_high = "W_A = 1";
  svgplot::write_heatmap(out_dir / "grid_heatmap.svg", heatmap);
  return report;
}

VolCurve compute_vol_curve(const SweepSpec& spec, int jobs) {
  spec.base.validate();
  if (spec.dpa_list.empty())
    throw std::invalid_argument("volatility curve needs a non-empty dP_A list");
  for (const double dp : spec.dpa_list) tick_from_percent(dp);
  if (spec.seeds_per_cell < 1)
    throw std::invalid_argument("seeds_per_cell must be >= 1");

  struct CurveRun {
    double sigma_t_pct = 0;
    double move_sigma_pct = 0;
    double w_a = 0;
    bool ok = false;
  };

  std::vector<RunTask> tasks;
  for (const double dpa : spec.dpa_list) {
    for (int64_t s = 0; s < spec.seeds_per_cell; ++s) {
      RunTask task;
      task.config = spec.base;
      task.config.dP_A = dpa;
      task.config.seed = spec.base.seed + static_cast<uint64_t>(s);
      task.measurement_day = spec.measurement_day;
      tasks.push_back(task);
    }
  }

  std::vector<CurveRun> runs(tasks.size());
  parallel_for_index(tasks.size(), jobs, [&](size_t index) {
    try {
      const SimulationOutput output =
          Simulation::run(tasks[index].config, tasks[index].options);
      const SummaryRow row = summarize(output, tasks[index].measurement_day);
      runs[index].sigma_t_pct = row.sigma_t_pct;
      runs[index].move_sigma_pct = price_change_volatility_pct(output.trades_a);
      runs[index].w_a = row.w_a_at_day;
      runs[index].ok = true;
    } catch (const std::exception&) {
      runs[index].ok = false;
    }
  });

  VolCurve curve;
  curve.dP_B = spec.base.dP_B;
  size_t index = 0;
  for (const double dpa : spec.dpa_list) {
    std::vector<double> sigmas, moves, shares;
    for (int64_t s = 0; s < spec.seeds_per_cell; ++s, ++index) {
      if (!runs[index].ok) continue;
      sigmas.push_back(runs[index].sigma_t_pct);
      moves.push_back(runs[index].move_sigma_pct);
      shares.push_back(runs[index].w_a);
    }
    curve.points.push_back(
        VolCurvePoint{dpa, mean_of(sigmas), mean_of(moves), mean_of(shares)});
  }
  return curve;
}

VolCurve run_volatility_curve(const SweepSpec& spec, int jobs,
                              const std::filesystem::path& out_dir) {
  ensure_dir(out_dir);
  const VolCurve curve = compute_vol_curve(spec, jobs);

  {
    csv::Writer w(out_dir / "vol_curve.csv");
    w.row({"dP_A", "dP_B", "sigma_t_pct", "move_sigma_pct", "W_A"});
    for (const VolCurvePoint& p : curve.points) {
      w.row({csv::num(p.dP_A), csv::num(curve.dP_B), csv::num(p.sigma_t_pct),
             csv::num(p.move_sigma_pct), csv::num(p.w_a)});
    }
  }

  svgplot::Series sigma_series;
  sigma_series.label = "per-tick sigma_t (%)";
  sigma_series.color = "#1f77b4";
  svgplot::Series move_series;
  move_series.label = "price-change sigma (%)";
  move_series.color = "#2ca02c";
  svgplot::Series share_series;
  share_series.label = "W_A";
  share_series.color = "#d62728";
  share_series.second_axis = true;
  for (const VolCurvePoint& p : curve.points) {
    if (std::isfinite(p.sigma_t_pct)) {
      sigma_series.x.push_back(p.dP_A);
      sigma_series.y.push_back(p.sigma_t_pct);
    }
    if (std::isfinite(p.move_sigma_pct)) {
      move_series.x.push_back(p.dP_A);
      move_series.y.push_back(p.move_sigma_pct);
    }
    if (std::isfinite(p.w_a)) {
      share_series.x.push_back(p.dP_A);
      share_series.y.push_back(p.w_a);
    }
  }
  svgplot::ChartOptions options;
  options.title = "Volatility and market share vs tick size of A";
  options.x_label = "tick size of market A, % of fundamental";
  options.y_label = "volatility, %";
  options.y2_label = "W_A";
  options.log_x = true;
  options.log_y = true;
  svgplot::write_line_chart(out_dir / "vol_curve.svg",
                            {sigma_series, move_series, share_series}, options);
  return curve;
}

}  // namespace ticksim
