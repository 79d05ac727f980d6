// SPDX-License-Identifier: Apache-2.0
// edgegap: tabulate, verify, transcendent, sample.
#include <iostream>
#include <utility>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace {

void add_shared(CLI::App& cmd, edgegap::cli::RawOptions& raw) {
  cmd.add_option("--edge", raw.edge, "soft | hard");
  cmd.add_option("--beta", raw.beta, "1 | 2 | 4");
  cmd.add_option("--a", raw.a, "underlying Bessel order(s), comma separated");
  cmd.add_option("--xi", raw.xi, "xi value(s) in [0, 2], comma separated");
  cmd.add_option("--s", raw.s, "s grid lo:hi:step (inclusive) or a single value");
  cmd.add_option("--method", raw.method, "fredholm | painleve | both");
  cmd.add_option("--quad-order", raw.quad_order, "Gauss-Legendre order m (2..512)");
  cmd.add_option("--truncation", raw.truncation, "soft-edge truncation length base");
  cmd.add_option("--seed", raw.seed, "64-bit seed");
  cmd.add_option("--reps", raw.reps, "Monte Carlo replicates");
  cmd.add_option("--threads", raw.threads, "worker threads");
  cmd.add_option("--out", raw.out, "output path (default stdout)");
  cmd.add_option("--format", raw.format, "csv | json");
  cmd.add_option("--N", raw.n_size, "matrix size for Monte Carlo");
  cmd.add_option("--n", raw.levels, "gap levels for bD/bDh, comma separated");
  cmd.add_option("--identity", raw.identity, "identity list for verify, or 'all'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Soft- and hard-edge gap probability generating functions"};
  app.require_subcommand(1);
  edgegap::cli::RawOptions raw;
  const std::pair<const char*, const char*> subs[] = {
      {"tabulate", "E_beta(J; xi) on a grid"},
      {"verify", "check identities, exit 1 on failure"},
      {"transcendent", "q, ODE residual and mu along an s grid"},
      {"sample", "Monte Carlo gap-count frequencies"}};
  for (const auto& [name, about] : subs) {
    auto* cmd = app.add_subcommand(name, about);
    add_shared(*cmd, raw);
    cmd->callback([&raw, name] { raw.subcommand = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "edgegap: " << e.what() << '\n';
    return 2;
  }
  try {
    const auto cfg = edgegap::cli::make_config(raw);
    return edgegap::cli::run(cfg, std::cout);
  } catch (const edgegap::cli::UsageError& e) {
    std::cerr << "edgegap: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "edgegap: " << e.what() << '\n';
    return 2;
  }
}
