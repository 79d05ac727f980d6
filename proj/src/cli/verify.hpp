// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/output.hpp"

namespace edgegap::cli {

struct IdentityResult {
  std::string identity;
  std::string grid;
  std::int64_t points = 0;
  double max_deviation = 0.0;  // |z| for the Monte Carlo identities
  double tolerance = 0.0;
  bool pass = false;
};

/// Runs one named invariant suite (see known_identities()).
IdentityResult check_identity(const std::string& name, const RunConfig& cfg);

/// Runs cfg.identities; the summary carries "pass".
Table run_verify(const RunConfig& cfg, bool& all_pass);

}  // namespace edgegap::cli
