// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgegap/edgelaws.hpp"

namespace edgegap::cli {

/// Invalid command-line configuration; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Subcommand { Tabulate, Verify, Transcendent, Sample };
enum class Edge { Soft, Hard };
enum class Format { Csv, Json };

struct RunConfig {
  Subcommand subcommand = Subcommand::Tabulate;
  Edge edge = Edge::Soft;
  int beta = 2;
  std::vector<double> a_values{0.0};
  bool a_given = false;
  bool s_given = false;
  std::vector<double> xi_values{1.0};
  std::vector<double> s_values;
  std::vector<edgelaws::Method> methods{edgelaws::Method::Fredholm};
  edgelaws::Settings settings{};
  std::uint64_t seed = 7;
  std::uint64_t replicates = 200000;
  int threads = 1;
  int n_size = 4;
  std::vector<int> levels{0, 1};
  std::vector<std::string> identities;
  std::string out;  // empty: stdout
  Format format = Format::Csv;
};

/// Raw flag values as typed on the command line.
struct RawOptions {
  std::string subcommand;
  std::string edge = "soft";
  int beta = 2;
  std::optional<std::string> a;
  std::string xi = "1";
  std::optional<std::string> s;
  std::string method = "fredholm";
  int quad_order = 80;
  double truncation = 25.0;
  std::uint64_t seed = 7;
  std::uint64_t reps = 200000;
  int threads = 1;
  std::string out;
  std::optional<std::string> format;  // csv, except json for verify
  int n_size = 4;
  std::string levels = "0,1";
  std::string identity = "all";
};

/// `lo:hi:step`, endpoints inclusive within half a step; a bare number is a
/// one-point grid.
std::vector<double> parse_range(const std::string& text);
/// Comma-separated reals.
std::vector<double> parse_real_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

/// Every identity name accepted by `verify`, in report order.
const std::vector<std::string>& known_identities();

/// Validates and converts; throws UsageError.
RunConfig make_config(const RawOptions& raw);

}  // namespace edgegap::cli
