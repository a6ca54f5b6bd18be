#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "gwg/errors.hpp"
#include "gwg/experiments.hpp"

namespace gwg {

namespace {

constexpr const char* kMetricNames[kNumMetrics] = {"tri_norm", "l2_e0", "eb", "eg", "h2c", "h1c"};
constexpr const char* kRateNames[kNumMetrics] = {"tri_rate", "l2_rate", "eb_rate",
                                                 "eg_rate",  "h2c_rate", "h1c_rate"};

std::string format_error(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string format_rate(double v) {
  if (!std::isfinite(v)) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::vector<std::string> header() {
  std::vector<std::string> h = {"inv_h"};
  for (int i = 0; i < kNumMetrics; ++i) {
    h.emplace_back(kMetricNames[i]);
    h.emplace_back(kRateNames[i]);
  }
  return h;
}

std::vector<std::string> row_cells(const ConvergenceTable& table, std::size_t row) {
  std::vector<std::string> cells = {std::to_string(table.rows[row].inv_h)};
  const auto values = metric_values(table.rows[row].errors);
  const auto r = table.rates(row);
  for (int i = 0; i < kNumMetrics; ++i) {
    cells.push_back(format_error(values[i]));
    cells.push_back(format_rate(r[i]));
  }
  return cells;
}

void write_line(std::ostream& out, const std::vector<std::string>& cells, TableFormat format) {
  if (format == TableFormat::csv) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
  } else {
    out << '|';
    for (const auto& c : cells) out << ' ' << c << " |";
  }
  out << '\n';
}

}  // namespace

TableFormat table_format_from_string(const std::string& name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "markdown" || name == "md") return TableFormat::markdown;
  throw ConfigError("unknown table format '" + name + "'");
}

void emit(const ConvergenceTable& table, TableFormat format, std::ostream& out) {
  const auto h = header();
  write_line(out, h, format);
  if (format == TableFormat::markdown) {
    out << '|';
    for (std::size_t i = 0; i < h.size(); ++i) out << " --- |";
    out << '\n';
  }
  for (std::size_t row = 0; row < table.rows.size(); ++row) {
    write_line(out, row_cells(table, row), format);
  }
}

void emit(const ConvergenceTable& table, TableFormat format, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  emit(table, format, out);
  if (!out) throw std::runtime_error("error while writing '" + path + "'");
}

}  // namespace gwg
