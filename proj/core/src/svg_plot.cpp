#include "ticksim/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ticksim::svgplot {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string fmt_px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct AxisScale {
  double lo = 0;
  double hi = 1;
  bool log = false;

  double to_unit(double v) const {
    if (log) return (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
    return (v - lo) / (hi - lo);
  }
};

// Tick positions: decades on log axes, "nice" steps on linear ones.
std::vector<double> axis_ticks(const AxisScale& scale) {
  std::vector<double> ticks;
  if (scale.log) {
    const int first = static_cast<int>(std::ceil(std::log10(scale.lo) - 1e-9));
    const int last = static_cast<int>(std::floor(std::log10(scale.hi) + 1e-9));
    for (int e = first; e <= last; ++e) ticks.push_back(std::pow(10.0, e));
    if (ticks.empty()) ticks = {scale.lo, scale.hi};
    return ticks;
  }
  const double span = scale.hi - scale.lo;
  if (span <= 0) return {scale.lo};
  const double raw_step = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw_step)));
  double step = mag;
  for (const double m : {1.0, 2.0, 5.0, 10.0}) {
    if (mag * m >= raw_step) {
      step = mag * m;
      break;
    }
  }
  const double start = std::ceil(scale.lo / step) * step;
  for (double v = start; v <= scale.hi + step * 1e-9; v += step) ticks.push_back(v);
  return ticks;
}

AxisScale fit_scale(double lo, double hi, bool log) {
  if (log) {
    if (!(lo > 0)) lo = 1e-12;
    if (hi <= lo) hi = lo * 10;
    return AxisScale{lo / 1.2, hi * 1.2, true};
  }
  if (hi <= lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = (hi - lo) * 0.06;
  return AxisScale{lo - pad, hi + pad, false};
}

void open_svg(std::ostringstream& out, int width, int height) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
      << "\">\n<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
}

std::string text(double x, double y, const std::string& s, int size,
                 const std::string& anchor, const std::string& extra = "") {
  std::ostringstream out;
  out << "<text x=\"" << fmt_px(x) << "\" y=\"" << fmt_px(y)
      << "\" font-family=\"sans-serif\" font-size=\"" << size << "\" text-anchor=\""
      << anchor << "\"" << extra << ">" << s << "</text>\n";
  return out.str();
}

// Blue -> white -> red, v in [0,1].
std::string share_color(double v) {
  v = std::clamp(v, 0.0, 1.0);
  int r, g, b;
  if (v < 0.5) {
    const double t = v / 0.5;
    r = static_cast<int>(33 + t * (247 - 33));
    g = static_cast<int>(102 + t * (247 - 102));
    b = static_cast<int>(172 + t * (247 - 172));
  } else {
    const double t = (v - 0.5) / 0.5;
    r = static_cast<int>(247 + t * (178 - 247));
    g = static_cast<int>(247 + t * (24 - 247));
    b = static_cast<int>(247 + t * (43 - 247));
  }
  char buf[16];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

void write_line_chart(const std::filesystem::path& path,
                      const std::vector<Series>& series, const ChartOptions& options) {
  const double ml = 78, mr = options.y2_label.empty() ? 30 : 78;
  const double mt = 46, mb = 62;
  const double pw = options.width - ml - mr;
  const double ph = options.height - mt - mb;

  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo, y2_lo = x_lo, y2_hi = -x_lo;
  for (const Series& s : series) {
    for (const double v : s.x) {
      x_lo = std::min(x_lo, v);
      x_hi = std::max(x_hi, v);
    }
    for (const double v : s.y) {
      if (s.second_axis) {
        y2_lo = std::min(y2_lo, v);
        y2_hi = std::max(y2_hi, v);
      } else {
        y_lo = std::min(y_lo, v);
        y_hi = std::max(y_hi, v);
      }
    }
  }
  if (!std::isfinite(x_lo)) {
    x_lo = 0;
    x_hi = 1;
    y_lo = 0;
    y_hi = 1;
  }
  if (options.y_min) y_lo = *options.y_min;
  if (options.y_max) y_hi = *options.y_max;
  const AxisScale xs = fit_scale(x_lo, x_hi, options.log_x);
  const AxisScale ys = fit_scale(y_lo, y_hi, options.log_y);
  const AxisScale y2s =
      std::isfinite(y2_lo) ? fit_scale(y2_lo, y2_hi, false) : AxisScale{0, 1, false};

  const auto px = [&](double v) { return ml + xs.to_unit(v) * pw; };
  const auto py = [&](double v) { return mt + (1.0 - ys.to_unit(v)) * ph; };
  const auto py2 = [&](double v) { return mt + (1.0 - y2s.to_unit(v)) * ph; };

  std::ostringstream out;
  open_svg(out, options.width, options.height);
  out << text(options.width / 2.0, 24, options.title, 15, "middle");

  // frame and grid
  out << "<rect x=\"" << fmt_px(ml) << "\" y=\"" << fmt_px(mt) << "\" width=\""
      << fmt_px(pw) << "\" height=\"" << fmt_px(ph)
      << "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (const double tx : axis_ticks(xs)) {
    const double X = px(tx);
    out << "<line x1=\"" << fmt_px(X) << "\" y1=\"" << fmt_px(mt) << "\" x2=\""
        << fmt_px(X) << "\" y2=\"" << fmt_px(mt + ph)
        << "\" stroke=\"#ddd\" stroke-width=\"0.6\"/>\n";
    out << text(X, mt + ph + 18, fmt(tx), 11, "middle");
  }
  for (const double ty : axis_ticks(ys)) {
    const double Y = py(ty);
    out << "<line x1=\"" << fmt_px(ml) << "\" y1=\"" << fmt_px(Y) << "\" x2=\""
        << fmt_px(ml + pw) << "\" y2=\"" << fmt_px(Y)
        << "\" stroke=\"#ddd\" stroke-width=\"0.6\"/>\n";
    out << text(ml - 6, Y + 4, fmt(ty), 11, "end");
  }
  if (!options.y2_label.empty()) {
    for (const double ty : axis_ticks(y2s)) {
      out << text(ml + pw + 6, py2(ty) + 4, fmt(ty), 11, "start");
    }
  }
  out << text(ml + pw / 2.0, options.height - 14, options.x_label, 12, "middle");
  out << text(18, mt + ph / 2.0, options.y_label, 12, "middle",
              " transform=\"rotate(-90 18 " + fmt_px(mt + ph / 2.0) + ")\"");
  if (!options.y2_label.empty()) {
    const double X = options.width - 16;
    out << text(X, mt + ph / 2.0, options.y2_label, 12, "middle",
                " transform=\"rotate(90 " + fmt_px(X) + " " + fmt_px(mt + ph / 2.0) +
                    ")\"");
  }

  // series polylines, thinned to at most ~4000 points each
  double legend_y = mt + 14;
  for (const Series& s : series) {
    const size_t n = std::min(s.x.size(), s.y.size());
    if (n == 0) continue;
    const size_t stride = std::max<size_t>(1, n / 4000);
    std::ostringstream pts;
    for (size_t i = 0; i < n; i += stride) {
      pts << fmt_px(px(s.x[i])) << ','
          << fmt_px(s.second_axis ? py2(s.y[i]) : py(s.y[i])) << ' ';
    }
    if ((n - 1) % stride != 0) {
      pts << fmt_px(px(s.x[n - 1])) << ','
          << fmt_px(s.second_axis ? py2(s.y[n - 1]) : py(s.y[n - 1]));
    }
    out << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"1.4\" points=\"" << pts.str() << "\"/>\n";
    if (!s.label.empty()) {
      out << "<line x1=\"" << fmt_px(ml + pw - 150) << "\" y1=\"" << fmt_px(legend_y)
          << "\" x2=\"" << fmt_px(ml + pw - 126) << "\" y2=\"" << fmt_px(legend_y)
          << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
      out << text(ml + pw - 120, legend_y + 4, s.label, 11, "start");
      legend_y += 16;
    }
  }
  out << "</svg>\n";
  write_file(path, out.str());
}

void write_heatmap(const std::filesystem::path& path, const Heatmap& hm) {
  const int width = 860, height = 640;
  const double ml = 92, mr = 110, mt = 48, mb = 72;
  const double pw = width - ml - mr;
  const double ph = height - mt - mb;
  const size_t cols = hm.x_values.size();
  const size_t rows = hm.y_values.size();
  if (cols == 0 || rows == 0) throw std::invalid_argument("empty heatmap grid");

  // Cells are laid out uniformly; values are log-spaced in the data.
  const double cw = pw / static_cast<double>(cols);
  const double ch = ph / static_cast<double>(rows);
  // Data coordinate -> pixel, treating cell centers as the log positions.
  const auto x_center = [&](size_t i) { return ml + (static_cast<double>(i) + 0.5) * cw; };
  const auto y_center = [&](size_t j) {
    return mt + ph - (static_cast<double>(j) + 0.5) * ch;
  };
  const auto x_of = [&](double v) {
    // piecewise-log interpolation between cell centers
    const double lv = std::log10(v);
    const double l0 = std::log10(hm.x_values.front());
    const double l1 = std::log10(hm.x_values.back());
    const double unit = cols == 1 ? 0.5 : (lv - l0) / (l1 - l0);
    return ml + 0.5 * cw + unit * (pw - cw);
  };
  const auto y_of = [&](double v) {
    const double lv = std::log10(v);
    const double l0 = std::log10(hm.y_values.front());
    const double l1 = std::log10(hm.y_values.back());
    const double unit = rows == 1 ? 0.5 : (lv - l0) / (l1 - l0);
    return mt + ph - 0.5 * ch - unit * (ph - ch);
  };

  std::ostringstream out;
  open_svg(out, width, height);
  out << text(width / 2.0, 26, hm.title, 15, "middle");

  for (size_t j = 0; j < rows; ++j) {
    for (size_t i = 0; i < cols; ++i) {
      const double v = hm.values[j][i];
      const double x = ml + static_cast<double>(i) * cw;
      const double y = mt + ph - static_cast<double>(j + 1) * ch;
      out << "<rect x=\"" << fmt_px(x) << "\" y=\"" << fmt_px(y) << "\" width=\""
          << fmt_px(cw) << "\" height=\"" << fmt_px(ch) << "\" fill=\""
          << (std::isfinite(v) ? share_color(v) : std::string("#aaaaaa"))
          << "\" stroke=\"#666\" stroke-width=\"0.4\"/>\n";
      if (std::isfinite(v)) {
        out << text(x + cw / 2.0, y + ch / 2.0 + 3, fmt(std::round(v * 100) / 100), 9,
                    "middle");
      }
    }
  }
  for (size_t i = 0; i < cols; ++i) {
    out << text(x_center(i), mt + ph + 16, fmt(hm.x_values[i]), 10, "middle");
  }
  for (size_t j = 0; j < rows; ++j) {
    out << text(ml - 6, y_center(j) + 3, fmt(hm.y_values[j]), 10, "end");
  }
  out << text(ml + pw / 2.0, height - 20, hm.x_label, 12, "middle");
  out << text(22, mt + ph / 2.0, hm.y_label, 12, "middle",
              " transform=\"rotate(-90 22 " + fmt_px(mt + ph / 2.0) + ")\"");

  if (hm.draw_diagonal) {
    // y = x clipped to the overlapping data range
    const double lo = std::max(hm.x_values.front(), hm.y_values.front());
    const double hi = std::min(hm.x_values.back(), hm.y_values.back());
    if (hi >= lo) {
      out << "<line x1=\"" << fmt_px(x_of(lo)) << "\" y1=\"" << fmt_px(y_of(lo))
          << "\" x2=\"" << fmt_px(x_of(hi)) << "\" y2=\"" << fmt_px(y_of(hi))
          << "\" stroke=\"#000\" stroke-width=\"1.6\" stroke-dasharray=\"7 5\"/>\n";
    }
  }
  if (hm.horizontal_line && *hm.horizontal_line >= hm.y_values.front() &&
      *hm.horizontal_line <= hm.y_values.back()) {
    const double Y = y_of(*hm.horizontal_line);
    out << "<line x1=\"" << fmt_px(ml) << "\" y1=\"" << fmt_px(Y) << "\" x2=\""
        << fmt_px(ml + pw) << "\" y2=\"" << fmt_px(Y)
        << "\" stroke=\"#000\" stroke-width=\"1.8\"/>\n";
  }

  // color scale
  const double bx = ml + pw + 26, bw = 18, bh = ph * 0.7, by = mt + (ph - bh) / 2;
  const int steps = 40;
  for (int s = 0; s < steps; ++s) {
    const double v = static_cast<double>(s) / (steps - 1);
    out << "<rect x=\"" << fmt_px(bx) << "\" y=\""
        << fmt_px(by + bh - (s + 1) * bh / steps) << "\" width=\"" << fmt_px(bw)
        << "\" height=\"" << fmt_px(bh / steps + 0.5) << "\" fill=\"" << share_color(v)
        << "\"/>\n";
  }
  out << text(bx + bw / 2.0, by - 8, hm.legend_high, 10, "middle");
  out << text(bx + bw / 2.0, by + bh + 14, hm.legend_low, 10, "middle");
  out << "</svg>\n";
  write_file(path, out.str());
}

}  // namespace ticksim::svgplot
