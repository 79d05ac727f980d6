// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cli/config.hpp"

namespace edgegap::cli {

/// Empty cells serialize as "" in CSV and null in JSON.
using Cell = std::variant<std::monostate, std::string, double, std::int64_t, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Top-level fields of the JSON document (ignored by CSV).
  std::vector<std::pair<std::string, Cell>> summary;
};

/// Reals use "%.17g"; non-finite reals print as nan/inf (CSV) or null (JSON).
std::string format_real(double v);

void write_csv(std::ostream& out, const Table& table);
/// {<summary fields>, "columns": [...], "rows": [{column: value, ...}, ...]}
void write_json(std::ostream& out, const Table& table);
void write_table(std::ostream& out, const Table& table, Format format);

/// Writes to cfg.out, or to `fallback` when no path was given.
void emit(const RunConfig& cfg, const Table& table, std::ostream& fallback);

}  // namespace edgegap::cli
