// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors
//
// Minimal hand-rolled SVG plots. Every plot gets a sibling CSV with exactly
// the plotted data, so figures can be regenerated by any external tool.

#include "prefarena/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace prefarena {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 540.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
constexpr int kPaletteSize = 8;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[64];
  if (std::abs(v - std::round(v)) < 1e-9 && std::abs(v) < 1e7) {
    std::snprintf(buf, sizeof(buf), "%.0f", v);
  } else {
    std::snprintf(buf, sizeof(buf), "%g", v);
  }
  return buf;
}

struct Frame {
  double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;

  double px(double x) const {
    return kLeft + (x - x_min) / (x_max - x_min) * (kWidth - kLeft - kRight);
  }
  double py(double y) const {
    return kHeight - kBottom -
           (y - y_min) / (y_max - y_min) * (kHeight - kTop - kBottom);
  }
};

void pad_frame(Frame& f) {
  if (f.x_max == f.x_min) {
    f.x_min -= 1.0;
    f.x_max += 1.0;
  }
  if (f.y_max == f.y_min) {
    f.y_min -= 1.0;
    f.y_max += 1.0;
  }
  const double ypad = 0.05 * (f.y_max - f.y_min);
  f.y_min -= ypad;
  f.y_max += ypad;
}

std::vector<double> nice_ticks(double lo, double hi, int target = 6) {
  const double span = hi - lo;
  double step = std::pow(10.0, std::floor(std::log10(span / target)));
  for (double mult : {1.0, 2.0, 5.0, 10.0}) {
    if (span / (step * mult) <= target) {
      step *= mult;
      break;
    }
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + step * 1e-9; t += step)
    ticks.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
  return ticks;
}

class SvgWriter {
 public:
  SvgWriter(const Frame& frame, const std::string& title,
            const std::string& x_label, const std::string& y_label)
      : frame_(frame) {
    body_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
          << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
          << kHeight << "\">\n";
    body_ << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
          << "\" fill=\"white\"/>\n";
    body_ << "<text x=\"" << kWidth / 2 << "\" y=\"28\" font-family=\"sans-serif\""
          << " font-size=\"16\" text-anchor=\"middle\">" << title << "</text>\n";
    // axes
    body_ << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom
          << "\" x2=\"" << kWidth - kRight << "\" y2=\"" << kHeight - kBottom
          << "\" stroke=\"black\"/>\n";
    body_ << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
          << "\" y2=\"" << kHeight - kBottom << "\" stroke=\"black\"/>\n";
    for (double t : nice_ticks(frame_.x_min, frame_.x_max)) {
      const double x = frame_.px(t);
      body_ << "<line x1=\"" << num(x) << "\" y1=\"" << kHeight - kBottom
            << "\" x2=\"" << num(x) << "\" y2=\"" << kHeight - kBottom + 5
            << "\" stroke=\"black\"/>\n";
      body_ << "<text x=\"" << num(x) << "\" y=\"" << kHeight - kBottom + 20
            << "\" font-family=\"sans-serif\" font-size=\"11\""
            << " text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
    }
    for (double t : nice_ticks(frame_.y_min, frame_.y_max)) {
      const double y = frame_.py(t);
      body_ << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << num(y) << "\" x2=\""
            << kLeft << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>\n";
      body_ << "<text x=\"" << kLeft - 8 << "\" y=\"" << num(y + 4)
            << "\" font-family=\"sans-serif\" font-size=\"11\""
            << " text-anchor=\"end\">" << tick_label(t) << "</text>\n";
    }
    body_ << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\""
          << kHeight - 15 << "\" font-family=\"sans-serif\" font-size=\"13\""
          << " text-anchor=\"middle\">" << x_label << "</text>\n";
    body_ << "<text x=\"22\" y=\"" << (kTop + kHeight - kBottom) / 2
          << "\" font-family=\"sans-serif\" font-size=\"13\""
          << " text-anchor=\"middle\" transform=\"rotate(-90 22 "
          << (kTop + kHeight - kBottom) / 2 << ")\">" << y_label << "</text>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& points,
                const std::string& color, const std::string& dash = "") {
    body_ << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.8\"";
    if (!dash.empty()) body_ << " stroke-dasharray=\"" << dash << "\"";
    body_ << " points=\"";
    for (const auto& [x, y] : points)
      body_ << num(frame_.px(x)) << ',' << num(frame_.py(y)) << ' ';
    body_ << "\"/>\n";
  }

  void band(const std::vector<std::pair<double, double>>& upper,
            const std::vector<std::pair<double, double>>& lower,
            const std::string& color) {
    body_ << "<path fill=\"" << color << "\" fill-opacity=\"0.15\""
          << " stroke=\"none\" d=\"M";
    for (const auto& [x, y] : upper)
      body_ << num(frame_.px(x)) << ',' << num(frame_.py(y)) << ' ';
    for (auto it = lower.rbegin(); it != lower.rend(); ++it)
      body_ << num(frame_.px(it->first)) << ',' << num(frame_.py(it->second))
            << ' ';
    body_ << "Z\"/>\n";
  }

  void point(double x, double y, const std::string& color) {
    body_ << "<circle cx=\"" << num(frame_.px(x)) << "\" cy=\""
          << num(frame_.py(y)) << "\" r=\"3.5\" fill=\"" << color << "\"/>\n";
  }

  void error_bar(double x, double lo, double hi, const std::string& color) {
    const double px = frame_.px(x);
    body_ << "<line x1=\"" << num(px) << "\" y1=\"" << num(frame_.py(lo))
          << "\" x2=\"" << num(px) << "\" y2=\"" << num(frame_.py(hi))
          << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
  }

  void bar(double x_center, double half_width, double y,
           const std::string& color) {
    const double x0 = frame_.px(x_center - half_width);
    const double x1 = frame_.px(x_center + half_width);
    const double y0 = frame_.py(std::max(0.0, frame_.y_min));
    const double y1 = frame_.py(y);
    body_ << "<rect x=\"" << num(x0) << "\" y=\"" << num(y1) << "\" width=\""
          << num(x1 - x0) << "\" height=\"" << num(y0 - y1) << "\" fill=\""
          << color << "\" fill-opacity=\"0.8\"/>\n";
  }

  void x_category_label(double x, const std::string& label) {
    body_ << "<text x=\"" << num(frame_.px(x)) << "\" y=\""
          << kHeight - kBottom + 20
          << "\" font-family=\"sans-serif\" font-size=\"10\""
          << " text-anchor=\"end\" transform=\"rotate(-30 "
          << num(frame_.px(x)) << " " << kHeight - kBottom + 20 << ")\">"
          << label << "</text>\n";
  }

  void legend(const std::vector<std::pair<std::string, std::string>>& entries) {
    const double x0 = kWidth - kRight - 215.0;
    double y = kTop + 14.0;
    body_ << "<rect x=\"" << x0 - 8 << "\" y=\"" << kTop << "\" width=\"215\""
          << " height=\"" << entries.size() * 18 + 12
          << "\" fill=\"white\" fill-opacity=\"0.85\" stroke=\"#cccccc\"/>\n";
    for (const auto& [label, color] : entries) {
      body_ << "<line x1=\"" << x0 << "\" y1=\"" << y - 4 << "\" x2=\""
            << x0 + 22 << "\" y2=\"" << y - 4 << "\" stroke=\"" << color
            << "\" stroke-width=\"3\"/>\n";
      body_ << "<text x=\"" << x0 + 28 << "\" y=\"" << y
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << label
            << "</text>\n";
      y += 18.0;
    }
  }

  void save(const std::filesystem::path& path) {
    body_ << "</svg>\n";
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << body_.str();
    if (!out) throw IoError("failed while writing '" + path.string() + "'");
  }

 private:
  Frame frame_;
  std::ostringstream body_;
};

std::filesystem::path sibling_csv(const std::filesystem::path& path) {
  std::filesystem::path csv = path;
  csv.replace_extension(".csv");
  return csv;
}

void plot_correlation_bars(std::span<const ResultRow> rows,
                           const std::filesystem::path& path) {
  std::vector<ResultRow> sorted(rows.begin(), rows.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const ResultRow& a, const ResultRow& b) {
              return a.r_mean > b.r_mean;
            });
  Frame frame;
  frame.x_min = 0.0;
  frame.x_max = static_cast<double>(sorted.size());
  frame.y_min = 0.0;
  frame.y_max = 1.0;
  for (const ResultRow& row : sorted)
    frame.y_max = std::max(frame.y_max, row.r_ci_high);
  SvgWriter svg(frame, "Correlation of estimated vs true values",
                "method", "Pearson r");
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const std::string color = kPalette[i % kPaletteSize];
    const double x = static_cast<double>(i) + 0.5;
    svg.bar(x, 0.35, sorted[i].r_mean, color);
    svg.error_bar(x, sorted[i].r_ci_low, sorted[i].r_ci_high, "#333333");
    svg.x_category_label(x, sorted[i].method);
  }
  svg.save(path);
}

void plot_sweep_bands(std::span<const ResultRow> rows,
                      const std::filesystem::path& path) {
  std::map<std::string, std::vector<ResultRow>> by_method;
  for (const ResultRow& row : rows) by_method[row.method].push_back(row);

  Frame frame;
  frame.x_min = 1e300;
  frame.x_max = -1e300;
  frame.y_min = 1e300;
  frame.y_max = -1e300;
  for (const ResultRow& row : rows) {
    if (row.budget_requested > 0) {
      frame.x_min = std::min(frame.x_min, double(row.budget_requested));
      frame.x_max = std::max(frame.x_max, double(row.budget_requested));
    }
    frame.y_min = std::min(frame.y_min, row.r_ci_low);
    frame.y_max = std::max(frame.y_max, row.r_ci_high);
  }
  pad_frame(frame);
  SvgWriter svg(frame, "Correlation vs annotation budget",
                "total comparisons M", "Pearson r");
  std::vector<std::pair<std::string, std::string>> legend;
  int color_idx = 0;
  for (auto& [method, entries] : by_method) {
    const std::string color = kPalette[color_idx++ % kPaletteSize];
    std::sort(entries.begin(), entries.end(),
              [](const ResultRow& a, const ResultRow& b) {
                return a.budget_requested < b.budget_requested;
              });
    std::vector<std::pair<double, double>> line, upper, lower;
    for (const ResultRow& row : entries) {
      if (row.budget_requested <= 0) {
        // Natural-budget reference: horizontal dashed line at the mean.
        svg.polyline({{frame.x_min, row.r_mean}, {frame.x_max, row.r_mean}},
                     color, "6,4");
        legend.emplace_back(method + " (M=" +
                                tick_label(std::round(row.m_actual_mean)) + ")",
                            color);
        continue;
      }
      line.emplace_back(row.budget_requested, row.r_mean);
      upper.emplace_back(row.budget_requested, row.r_ci_high);
      lower.emplace_back(row.budget_requested, row.r_ci_low);
    }
    if (line.size() >= 2) {
      svg.band(upper, lower, color);
      svg.polyline(line, color);
      legend.emplace_back(method, color);
    } else if (line.size() == 1) {
      legend.emplace_back(method, color);
    }
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line.size() <= 6) {
        svg.point(line[i].first, line[i].second, color);
        svg.error_bar(line[i].first, lower[i].second, upper[i].second, color);
      }
    }
  }
  svg.legend(legend);
  svg.save(path);
}

void plot_curves(const CurveTable& table, const std::string& title,
                 const std::filesystem::path& path) {
  if (table.rows.empty() || table.columns.size() < 2)
    throw std::invalid_argument("plot: empty curve table");
  Frame frame;
  frame.x_min = 1e300;
  frame.x_max = -1e300;
  frame.y_min = 1e300;
  frame.y_max = -1e300;
  for (const auto& row : table.rows) {
    frame.x_min = std::min(frame.x_min, row[0]);
    frame.x_max = std::max(frame.x_max, row[0]);
    for (std::size_t c = 1; c < row.size(); ++c) {
      frame.y_min = std::min(frame.y_min, row[c]);
      frame.y_max = std::max(frame.y_max, row[c]);
    }
  }
  pad_frame(frame);
  SvgWriter svg(frame, title, table.columns[0], "value");
  std::vector<std::pair<std::string, std::string>> legend;
  for (std::size_t c = 1; c < table.columns.size(); ++c) {
    const std::string color = kPalette[(c - 1) % kPaletteSize];
    std::vector<std::pair<double, double>> line;
    line.reserve(table.rows.size());
    for (const auto& row : table.rows) line.emplace_back(row[0], row[c]);
    svg.polyline(line, color);
    legend.emplace_back(table.columns[c], color);
  }
  svg.legend(legend);
  svg.save(path);
}

}  // namespace

void write_plot(std::span<const ResultRow> rows, PlotKind kind,
                const std::filesystem::path& path) {
  if (rows.empty()) throw std::invalid_argument("plot: no rows");
  write_results_csv(rows, sibling_csv(path));
  switch (kind) {
    case PlotKind::kCorrelationBars:
      plot_correlation_bars(rows, path);
      break;
    case PlotKind::kSweepBands:
      plot_sweep_bands(rows, path);
      break;
    default:
      throw std::invalid_argument("plot: result rows need a bar or band kind");
  }
}

void write_plot(const CurveTable& table, PlotKind kind,
                const std::filesystem::path& path) {
  if (table.rows.empty()) throw std::invalid_argument("plot: empty table");
  write_curve_csv(table, sibling_csv(path));
  switch (kind) {
    case PlotKind::kOutcomeCurve:
      plot_curves(table, "Outcome probabilities vs value difference", path);
      break;
    case PlotKind::kKCurve:
      plot_curves(table, "Elo change vs initial rating difference", path);
      break;
    default:
      throw std::invalid_argument("plot: curve tables need a curve kind");
  }
}

}  // namespace prefarena
