// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "edgegap/ensembles.hpp"
#include "edgegap/error.hpp"

namespace edgegap::ensembles {

void CountStatistics::add(const EnsembleSample& sample) {
  const auto inside = static_cast<std::size_t>(std::count_if(
      sample.eigenvalues.begin(), sample.eigenvalues.end(),
      [&](double x) { return interval.contains(x); }));
  if (counts.size() <= inside) counts.resize(inside + 1, 0);
  ++counts[inside];
  ++replicates;
}

void CountStatistics::finalize() {
  estimates.assign(counts.size(), 0.0);
  std_errors.assign(counts.size(), 0.0);
  if (replicates == 0) return;
  const double r = static_cast<double>(replicates);
  for (std::size_t n = 0; n < counts.size(); ++n) {
    const double p = static_cast<double>(counts[n]) / r;
    estimates[n] = p;
    std_errors[n] = std::sqrt(p * (1.0 - p) / r);
  }
}

double CountStatistics::estimate(int n) const {
  if (n < 0 || static_cast<std::size_t>(n) >= estimates.size()) return 0.0;
  return estimates[n];
}

double CountStatistics::std_error(int n) const {
  if (n < 0 || static_cast<std::size_t>(n) >= std_errors.size()) return 0.0;
  return std_errors[n];
}

CountStatistics gap_counts(std::span<const EnsembleSample> samples, Interval interval) {
  CountStatistics stats{interval, {}, {}, {}, 0};
  for (const auto& s : samples) stats.add(s);
  stats.finalize();
  return stats;
}

CountStatistics gap_counts(const EnsembleSpec& spec, Interval interval, std::uint64_t replicates,
                           std::uint64_t seed) {
  if (replicates < 1) throw DomainError("gap_counts: need at least one replicate");
  CountStatistics stats{interval, {}, {}, {}, 0};
  Sampler sampler(spec, seed);
  for (std::uint64_t r = 0; r < replicates; ++r) stats.add(sampler.next());
  stats.finalize();
  return stats;
}

const char* to_string(Identity id) {
  switch (id) {
    case Identity::A1: return "a1";
    case Identity::A2: return "a2";
    case Identity::A1h: return "a1h";
    case Identity::A2h: return "a2h";
  }
  return "?";
}

Identity identity_from_string(const std::string& name) {
  if (name == "a1" || name == "A1") return Identity::A1;
  if (name == "a2" || name == "A2") return Identity::A2;
  if (name == "a1h" || name == "A1h") return Identity::A1h;
  if (name == "a2h" || name == "A2h") return Identity::A2h;
  throw DomainError("unknown Monte Carlo identity: " + name);
}

namespace {

// Variance of sum_k g_k p^_k for multinomial frequencies p^ over R draws.
double linear_variance(const CountStatistics& stats, const std::vector<double>& g) {
  double second = 0.0;
  double first = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double p = stats.estimate(static_cast<int>(k));
    second += g[k] * g[k] * p;
    first += g[k] * p;
  }
  return std::max(0.0, second - first * first) / static_cast<double>(stats.replicates);
}

double z_score(double lhs, double var_lhs, double rhs, double var_rhs) {
  const double sd = std::sqrt(var_lhs + var_rhs);
  if (sd == 0.0) return lhs == rhs ? 0.0 : std::numeric_limits<double>::infinity();
  return (lhs - rhs) / sd;
}

}  // namespace

IdentityReport verify_identity(Identity id, int n_size, Interval interval, std::uint64_t replicates,
                               std::uint64_t seed, double a) {
  if (n_size < 1) throw DomainError("verify_identity: N must be >= 1");
  if (replicates < 1) throw DomainError("verify_identity: need at least one replicate");
  const bool hard = id == Identity::A1h || id == Identity::A2h;
  const bool superposition = id == Identity::A1 || id == Identity::A1h;
  auto spec_for = [&](int beta, int n) {
    return hard ? EnsembleSpec::laguerre_for_order(beta, n, a) : EnsembleSpec::gaussian(beta, n);
  };

  IdentityReport report{id, n_size, interval, replicates, seed, {}, 0.0, true};
  const auto lhs = gap_counts(spec_for(superposition ? 2 : 4, n_size), interval, replicates,
                              split_seed(seed, 1));
  if (superposition) {
    const auto small = gap_counts(spec_for(1, n_size), interval, replicates, split_seed(seed, 2));
    const auto large = gap_counts(spec_for(1, n_size + 1), interval, replicates, split_seed(seed, 3));
    for (int n = 0; 2 * n <= n_size; ++n) {
      const int top = 2 * n + 1;
      double rhs = 0.0;
      std::vector<double> g_small(top + 1, 0.0);
      std::vector<double> g_large(top + 1, 0.0);
      for (int p = 0; p <= top; ++p) {
        const double b = large.estimate(p) + large.estimate(p - 1);
        rhs += small.estimate(top - p) * b;
        g_small[top - p] += b;
        g_large[p] += small.estimate(top - p);
        if (p >= 1) g_large[p - 1] += small.estimate(top - p);
      }
      const double l = lhs.estimate(n);
      const double var_l = lhs.std_error(n) * lhs.std_error(n);
      const double var_r = linear_variance(small, g_small) + linear_variance(large, g_large);
      report.levels.push_back({n, l, rhs, z_score(l, var_l, rhs, var_r)});
    }
  } else {
    const auto odd = gap_counts(spec_for(1, 2 * n_size + 1), interval, replicates, split_seed(seed, 2));
    for (int n = 0; n <= n_size; ++n) {
      const double rhs = odd.estimate(2 * n) + odd.estimate(2 * n + 1);
      const double l = lhs.estimate(n);
      const double var_l = lhs.std_error(n) * lhs.std_error(n);
      const double var_r = rhs * (1.0 - rhs) / static_cast<double>(replicates);
      report.levels.push_back({n, l, rhs, z_score(l, var_l, rhs, var_r)});
    }
  }
  for (const auto& lv : report.levels) {
    report.max_abs_z = std::max(report.max_abs_z, std::abs(lv.z));
    if (!(std::abs(lv.z) < 4.0)) report.pass = false;
  }
  return report;
}

}  // namespace edgegap::ensembles
