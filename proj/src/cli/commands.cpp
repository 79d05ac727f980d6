// SPDX-License-Identifier: Apache-2.0
#include "cli/commands.hpp"

#include <limits>

#include "cli/pool.hpp"
#include "cli/verify.hpp"
#include "edgegap/edgelaws.hpp"
#include "edgegap/ensembles.hpp"
#include "edgegap/error.hpp"
#include "edgegap/transcendents.hpp"

namespace edgegap::cli {

namespace {

constexpr std::uint64_t kChunk = 4096;

const char* edge_name(Edge e) { return e == Edge::Soft ? "soft" : "hard"; }

}  // namespace

Table run_tabulate(const RunConfig& cfg) {
  const bool hard = cfg.edge == Edge::Hard;
  std::vector<edgelaws::GapQuery> queries;
  const std::vector<double> as = hard ? cfg.a_values : std::vector<double>{0.0};
  for (double a : as)
    for (double xi : cfg.xi_values)
      for (double s : cfg.s_values)
        for (auto m : cfg.methods) {
          edgelaws::GapQuery q;
          q.regime = hard ? edgelaws::Regime{edgelaws::Hard{a}} : edgelaws::Regime{edgelaws::Soft{}};
          q.beta = edgelaws::beta_from_int(cfg.beta);
          q.s = s;
          q.xi = xi;
          q.method = m;
          queries.push_back(q);
        }
  const auto values = parallel_map(queries.size(), cfg.threads, [&](std::size_t i) {
    return edgelaws::evaluate(queries[i], cfg.settings);
  });

  Table t;
  t.columns = {"edge", "beta", "a", "index", "s", "xi", "method", "value", "quad_order", "truncation"};
  for (const auto& v : values) {
    const auto& q = v.query;
    Cell a, index;
    if (hard) {
      a = q.underlying_a();
      index = q.bessel_index();
    }
    t.rows.push_back({std::string(edge_name(cfg.edge)), static_cast<std::int64_t>(cfg.beta), a, index, q.s,
                      q.xi, std::string(edgelaws::to_string(q.method)), v.value,
                      static_cast<std::int64_t>(v.diagnostics.quad_order),
                      hard ? Cell{} : Cell{v.diagnostics.truncation}});
  }
  return t;
}

Table run_transcendent(const RunConfig& cfg) {
  const bool hard = cfg.edge == Edge::Hard;
  struct Job {
    double a;
    double xi;
  };
  std::vector<Job> jobs;
  const std::vector<double> as = hard ? cfg.a_values : std::vector<double>{0.0};
  for (double a : as)
    for (double xi : cfg.xi_values) jobs.push_back({a, xi});
  const auto traces = parallel_map(jobs.size(), cfg.threads, [&](std::size_t i) {
    const transcendents::Regime regime =
        hard ? transcendents::Regime{transcendents::Hard{jobs[i].a}} : transcendents::Regime{transcendents::Soft{}};
    return transcendents::trace(regime, jobs[i].xi, cfg.s_values, cfg.settings);
  });

  Table t;
  t.columns = {"edge", "a", "xi", "t", "q", "residual", "mu"};
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const auto& tr = traces[j];
    for (std::size_t i = 0; i < tr.grid.size(); ++i) {
      Cell a, residual = tr.residuals[i];
      if (hard) {
        a = jobs[j].a;
        if (tr.grid[i] - 2.0 * transcendents::kStencilStep <= 0.0) residual = std::monostate{};
      }
      t.rows.push_back({std::string(edge_name(cfg.edge)), a, tr.xi, tr.grid[i], tr.values[i], residual, tr.mu[i]});
    }
  }
  return t;
}

Table run_sample(const RunConfig& cfg) {
  const bool hard = cfg.edge == Edge::Hard;
  const double a = cfg.a_values.front();
  const auto spec = hard ? ensembles::EnsembleSpec::laguerre_for_order(cfg.beta, cfg.n_size, a)
                         : ensembles::EnsembleSpec::gaussian(cfg.beta, cfg.n_size);
  spec.validate();
  std::vector<ensembles::Interval> intervals;
  for (double s : cfg.s_values)
    intervals.push_back(hard ? ensembles::Interval{0.0, s}
                             : ensembles::Interval{s, std::numeric_limits<double>::infinity()});

  const std::uint64_t chunks = (cfg.replicates + kChunk - 1) / kChunk;
  auto partial = parallel_map(chunks, cfg.threads, [&](std::size_t c) {
    std::vector<ensembles::CountStatistics> stats;
    for (const auto& iv : intervals) stats.push_back({iv, {}, {}, {}, 0});
    const std::uint64_t begin = c * kChunk;
    const std::uint64_t end = std::min(cfg.replicates, begin + kChunk);
    ensembles::Sampler sampler(spec, ensembles::split_seed(cfg.seed, c));
    for (std::uint64_t r = begin; r < end; ++r) {
      const auto smp = sampler.next();
      for (auto& st : stats) st.add(smp);
    }
    return stats;
  });

  Table t;
  t.columns = {"edge", "beta", "N", "a", "s", "n", "count", "estimate", "std_error"};
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    ensembles::CountStatistics total{intervals[k], std::vector<std::uint64_t>(cfg.n_size + 1, 0), {}, {}, 0};
    for (const auto& part : partial) {
      for (std::size_t n = 0; n < part[k].counts.size(); ++n) total.counts[n] += part[k].counts[n];
      total.replicates += part[k].replicates;
    }
    total.finalize();
    for (std::size_t n = 0; n < total.counts.size(); ++n) {
      Cell acell;
      if (hard) acell = a;
      t.rows.push_back({std::string(edge_name(cfg.edge)), static_cast<std::int64_t>(cfg.beta),
                        static_cast<std::int64_t>(cfg.n_size), acell, cfg.s_values[k],
                        static_cast<std::int64_t>(n), static_cast<std::int64_t>(total.counts[n]),
                        total.estimates[n], total.std_errors[n]});
    }
  }
  return t;
}

int run(const RunConfig& cfg, std::ostream& out) {
  try {
    switch (cfg.subcommand) {
      case Subcommand::Tabulate: emit(cfg, run_tabulate(cfg), out); return 0;
      case Subcommand::Transcendent: emit(cfg, run_transcendent(cfg), out); return 0;
      case Subcommand::Sample: emit(cfg, run_sample(cfg), out); return 0;
      case Subcommand::Verify: {
        bool pass = false;
        auto table = run_verify(cfg, pass);
        emit(cfg, table, out);
        return pass ? 0 : 1;
      }
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return 2;
}

}  // namespace edgegap::cli
