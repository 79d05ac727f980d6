// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>

#include "cli/config.hpp"
#include "cli/output.hpp"

namespace edgegap::cli {

/// Columns: edge, beta, a, index, s, xi, method, value, quad_order, truncation.
/// Rows ordered by a, then xi, then s, then method. For the hard edge `a` is
/// the underlying order and `index` the order attached to the beta law.
Table run_tabulate(const RunConfig& cfg);

/// Columns: edge, a, xi, t, q, residual, mu. The residual cell is empty where
/// the stencil does not fit inside (0, t).
Table run_transcendent(const RunConfig& cfg);

/// Columns: edge, beta, N, a, s, n, count, estimate, std_error. Replicates are
/// drawn in fixed-size chunks with per-chunk seeds, so output does not depend
/// on --threads.
Table run_sample(const RunConfig& cfg);

/// Runs the configured subcommand and writes its table. Returns the exit code
/// (0 ok, 1 verification failure); throws UsageError for bad input.
int run(const RunConfig& cfg, std::ostream& out);

}  // namespace edgegap::cli
