#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ticksim::svgplot {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  bool second_axis = false;  // plot against the right-hand y axis
};

struct ChartOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::string y2_label;
  bool log_x = false;
  bool log_y = false;
  std::optional<double> y_min;
  std::optional<double> y_max;
  int width = 880;
  int height = 520;
};

void write_line_chart(const std::filesystem::path& path,
                      const std::vector<Series>& series, const ChartOptions& options);

// Grid of values in [0, 1] on log-scaled axes, with optional overlays:
// a dashed y = x diagonal and a solid horizontal line.
struct Heatmap {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<double> x_values;        // one per column, ascending
  std::vector<double> y_values;        // one per row, ascending
  std::vector<std::vector<double>> values;  // [row][column]
  bool draw_diagonal = false;
  std::optional<double> horizontal_line;
  std::string legend_low = "0";
  std::string legend_high = "1";
};

void write_heatmap(const std::filesystem::path& path, const Heatmap& heatmap);

}  // namespace ticksim::svgplot
