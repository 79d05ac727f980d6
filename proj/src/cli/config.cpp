// SPDX-License-Identifier: Apache-2.0
#include "cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "edgegap/quad.hpp"

namespace edgegap::cli {

namespace {

double parse_real(const std::string& token) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + token + "'");
  }
  if (used != token.size() || !std::isfinite(v)) throw UsageError("not a number: '" + token + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

std::vector<double> parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) return {parse_real(parts[0])};
  if (parts.size() != 3) throw UsageError("range must be lo:hi:step, got '" + text + "'");
  const double lo = parse_real(parts[0]);
  const double hi = parse_real(parts[1]);
  const double step = parse_real(parts[2]);
  if (!(step > 0.0)) throw UsageError("range step must be positive");
  if (hi < lo) throw UsageError("range has hi < lo");
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 0.5));
  if (count > 100000) throw UsageError("range has too many points");
  std::vector<double> grid;
  for (long k = 0; k <= count; ++k) grid.push_back(lo + static_cast<double>(k) * step);
  return grid;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& t : split(text, ',')) out.push_back(parse_real(t));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& t : split(text, ',')) {
    const double v = parse_real(t);
    if (v != std::floor(v) || v < 0 || v > 1e6) throw UsageError("not a non-negative integer: '" + t + "'");
    out.push_back(static_cast<int>(v));
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

const std::vector<std::string>& known_identities() {
  static const std::vector<std::string> names{
      "df1", "routes", "thm12", "aE", "cE", "bE", "aEh", "cEh", "bEh",
      "nsum", "bD", "bDh", "a1", "a2", "a1h", "a2h"};
  return names;
}

RunConfig make_config(const RawOptions& raw) {
  RunConfig cfg;
  if (raw.subcommand == "tabulate") cfg.subcommand = Subcommand::Tabulate;
  else if (raw.subcommand == "verify") cfg.subcommand = Subcommand::Verify;
  else if (raw.subcommand == "transcendent") cfg.subcommand = Subcommand::Transcendent;
  else if (raw.subcommand == "sample") cfg.subcommand = Subcommand::Sample;
  else throw UsageError("unknown subcommand '" + raw.subcommand + "'");

  if (raw.edge == "soft") cfg.edge = Edge::Soft;
  else if (raw.edge == "hard") cfg.edge = Edge::Hard;
  else throw UsageError("--edge must be soft or hard");

  if (raw.beta != 1 && raw.beta != 2 && raw.beta != 4) throw UsageError("--beta must be 1, 2 or 4");
  cfg.beta = raw.beta;

  cfg.a_given = raw.a.has_value();
  cfg.a_values = parse_real_list(raw.a.value_or("0"));
  for (double a : cfg.a_values)
    if (!(a > -1.0)) throw UsageError("--a must be > -1");
  cfg.xi_values = parse_real_list(raw.xi);
  for (double xi : cfg.xi_values)
    if (xi < 0.0 || xi > 2.0) throw UsageError("--xi values must lie in [0, 2]");

  cfg.s_given = raw.s.has_value();
  if (raw.s) {
    cfg.s_values = parse_range(*raw.s);
  } else if (cfg.subcommand == Subcommand::Transcendent) {
    cfg.s_values = cfg.edge == Edge::Soft ? parse_range("-6:4:0.5") : parse_range("0.5:10:0.5");
  } else if (cfg.subcommand == Subcommand::Sample) {
    cfg.s_values = cfg.edge == Edge::Soft ? std::vector<double>{1.0} : std::vector<double>{2.0};
  } else {
    cfg.s_values = cfg.edge == Edge::Soft ? parse_range("-4:4:1") : parse_range("1:4:1");
  }
  if (cfg.edge == Edge::Hard && cfg.subcommand != Subcommand::Verify)
    for (double s : cfg.s_values)
      if (!(s > 0.0)) throw UsageError("hard-edge s values must be positive");

  using edgelaws::Method;
  if (raw.method == "fredholm") cfg.methods = {Method::Fredholm};
  else if (raw.method == "painleve") cfg.methods = {Method::Painleve};
  else if (raw.method == "both") cfg.methods = {Method::Fredholm, Method::Painleve};
  else throw UsageError("--method must be fredholm, painleve or both");

  if (raw.quad_order < quad::kMinOrder || raw.quad_order > quad::kMaxOrder)
    throw UsageError("--quad-order must lie in [2, 512]");
  if (!(raw.truncation > 0.0) || !std::isfinite(raw.truncation))
    throw UsageError("--truncation must be positive");
  cfg.settings.quad_order = raw.quad_order;
  cfg.settings.truncation = raw.truncation;

  cfg.seed = raw.seed;
  if (raw.reps < 1) throw UsageError("--reps must be >= 1");
  cfg.replicates = raw.reps;
  if (raw.threads < 1 || raw.threads > 256) throw UsageError("--threads must lie in [1, 256]");
  cfg.threads = raw.threads;
  if (raw.n_size < 1 || raw.n_size > 10000) throw UsageError("--N must lie in [1, 10000]");
  cfg.n_size = raw.n_size;
  cfg.levels = parse_int_list(raw.levels);
  for (int n : cfg.levels)
    if (n > edgelaws::kMaxLevel / 2 - 1) throw UsageError("--n levels must be <= 5");

  if (raw.identity == "all") {
    cfg.identities = known_identities();
  } else {
    for (const auto& name : split(raw.identity, ',')) {
      const auto& known = known_identities();
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw UsageError("unknown identity '" + name + "'");
      cfg.identities.push_back(name);
    }
  }

  cfg.out = raw.out;
  const std::string format = raw.format.value_or(cfg.subcommand == Subcommand::Verify ? "json" : "csv");
  if (format == "csv") cfg.format = Format::Csv;
  else if (format == "json") cfg.format = Format::Json;
  else throw UsageError("--format must be csv or json");
  return cfg;
}

}  // namespace edgegap::cli
