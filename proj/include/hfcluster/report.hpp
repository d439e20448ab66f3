// Copyright 2026 The hfcluster Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// CSV output with a provenance header: tool version, config hash, seed and
// a description of every column.

#pragma once

#include "hfcluster/config.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hfcluster {

inline constexpr const char* kVersion = "0.1.0";

/// Hash of the effective configuration; identical inputs give identical hashes.
inline std::string config_hash(const KeyValueConfig& cfg) { return hex64(fnv1a(cfg.canonical())); }

/// Compact decimal text (12 significant digits) for CSV cells.
inline std::string format_cell(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Column {
  std::string name;
  std::string doc;
};

class CsvTable {
 public:
  using Cell = std::variant<double, long long, std::string>;

  CsvTable(std::string title, std::vector<Column> columns) : title_(std::move(title)), columns_(std::move(columns)) {
    if (columns_.empty()) throw std::invalid_argument("CSV table needs at least one column");
  }

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) throw std::invalid_argument("CSV row width does not match the header");
    rows_.push_back(std::move(row));
  }

  void add_note(std::string note) { notes_.push_back(std::move(note)); }

  size_t rows() const { return rows_.size(); }
  const std::vector<Column>& columns() const { return columns_; }
  const Cell& cell(size_t row, size_t col) const { return rows_.at(row).at(col); }

  double number(size_t row, const std::string& column) const {
    for (size_t c = 0; c < columns_.size(); ++c)
      if (columns_[c].name == column) {
        const Cell& v = cell(row, c);
        if (auto d = std::get_if<double>(&v)) return *d;
        if (auto i = std::get_if<long long>(&v)) return static_cast<double>(*i);
        throw std::invalid_argument("column '" + column + "' is not numeric");
      }
    throw std::invalid_argument("no column '" + column + "'");
  }

  /// Header lines start with '#'; then the column names, then the rows.
  void write(std::ostream& out, const KeyValueConfig& cfg, uint64_t seed) const {
    out << "# hfcluster " << kVersion << " " << title_ << "\n";
    out << "# config_hash " << config_hash(cfg) << "\n";
    out << "# seed " << seed << "\n";
    for (const auto& k : cfg.keys()) out << "# config " << k << " = " << cfg.str(k) << "\n";
    for (const auto& c : columns_) out << "# column " << c.name << ": " << c.doc << "\n";
    for (const auto& n : notes_) out << "# note " << n << "\n";
    for (size_t c = 0; c < columns_.size(); ++c) out << (c ? "," : "") << columns_[c].name;
    out << "\n";
    for (const auto& row : rows_) {
      for (size_t c = 0; c < row.size(); ++c) {
        if (c) out << ",";
        std::visit(
            [&out](const auto& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, double>)
                out << format_cell(v);
              else
                out << v;
            },
            row[c]);
      }
      out << "\n";
    }
  }

  std::string str(const KeyValueConfig& cfg, uint64_t seed) const {
    std::ostringstream s;
    write(s, cfg, seed);
    return s.str();
  }

 private:
  std::string title_;
  std::vector<Column> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::string> notes_;
};

}  // namespace hfcluster
