// SPDX-License-Identifier: Apache-2.0
#include "cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace edgegap::cli {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
      }
      return q + "\"";
    }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, c);
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

std::string json_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "null"; }
    std::string operator()(const std::string& s) const { return json_string(s); }
    std::string operator()(double v) const { return std::isfinite(v) ? format_real(v) : "null"; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, c);
}

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t j = 0; j < table.columns.size(); ++j)
    out << (j ? "," : "") << table.columns[j];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << csv_cell(row[j]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  out << "{\n";
  for (const auto& [key, value] : table.summary)
    out << "  " << json_string(key) << ": " << json_cell(value) << ",\n";
  out << "  \"columns\": [";
  for (std::size_t j = 0; j < table.columns.size(); ++j)
    out << (j ? ", " : "") << json_string(table.columns[j]);
  out << "],\n  \"rows\": [";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    out << (i ? ",\n    {" : "\n    {");
    const auto& row = table.rows[i];
    for (std::size_t j = 0; j < row.size(); ++j)
      out << (j ? ", " : "") << json_string(table.columns[j]) << ": " << json_cell(row[j]);
    out << "}";
  }
  out << (table.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

void write_table(std::ostream& out, const Table& table, Format format) {
  if (format == Format::Json) write_json(out, table);
  else write_csv(out, table);
}

void emit(const RunConfig& cfg, const Table& table, std::ostream& fallback) {
  if (cfg.out.empty()) {
    write_table(fallback, table, cfg.format);
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + cfg.out + "'");
  write_table(file, table, cfg.format);
  if (!file) throw std::runtime_error("write failed: " + cfg.out);
}

}  // namespace edgegap::cli
