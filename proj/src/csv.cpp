// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prefarena contributors

#include "prefarena/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace prefarena {

namespace {

std::string fmt6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

void write_results_csv(std::span<const ResultRow> rows,
                       const std::filesystem::path& path) {
  std::vector<ResultRow> sorted(rows.begin(), rows.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const ResultRow& a, const ResultRow& b) {
              if (a.method != b.method) return a.method < b.method;
              return a.budget_requested < b.budget_requested;
            });
  std::ofstream out = open_for_write(path);
  out << "method,budget,m_mean,r_mean,r_ci_low,r_ci_high,n_seeds\n";
  for (const ResultRow& row : sorted) {
    out << row.method << ',' << row.budget_requested << ','
        << fmt6(row.m_actual_mean) << ',' << fmt6(row.r_mean) << ','
        << fmt6(row.r_ci_low) << ',' << fmt6(row.r_ci_high) << ','
        << row.n_seeds << '\n';
  }
  if (!out) throw IoError("failed while writing '" + path.string() + "'");
}

std::vector<ResultRow> read_results_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::string line;
  if (!std::getline(in, line))
    throw IoError("empty results file '" + path.string() + "'");
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 7)
      throw IoError("malformed row in '" + path.string() + "': " + line);
    ResultRow row;
    row.method = fields[0];
    row.budget_requested = std::stoi(fields[1]);
    row.m_actual_mean = std::stod(fields[2]);
    row.r_mean = std::stod(fields[3]);
    row.r_ci_low = std::stod(fields[4]);
    row.r_ci_high = std::stod(fields[5]);
    row.n_seeds = std::stoi(fields[6]);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_curve_csv(const CurveTable& table,
                     const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i > 0) out << ',';
    out << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << fmt6(row[i]);
    }
    out << '\n';
  }
  if (!out) throw IoError("failed while writing '" + path.string() + "'");
}

}  // namespace prefarena
