// SPDX-License-Identifier: Apache-2.0
#include "cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "cli/pool.hpp"
#include "edgegap/edgelaws.hpp"
#include "edgegap/ensembles.hpp"

namespace edgegap::cli {

namespace {

using edgelaws::Beta;
using edgelaws::GapQuery;
using edgelaws::Method;
using edgelaws::Settings;

const std::vector<double> kSoftS{-4, -2, 0, 2};
const std::vector<double> kDfXi{0.25, 0.5, 1.0};
const std::vector<double> kHardA{0, 1, 2};
const std::vector<double> kHardS{0.5, 2, 10};
const std::vector<double> kIdentityXi{0.25, 0.5, 0.75};
const std::vector<double> kIdentitySoftS{-2, 0, 2};
const std::vector<double> kIdentityHardS{1, 4, 16};

struct Point {
  double s;
  double a;
  double xi;
};

std::vector<Point> grid(const std::vector<double>& ss, const std::vector<double>& as,
                        const std::vector<double>& xis) {
  std::vector<Point> pts;
  for (double a : as)
    for (double s : ss)
      for (double xi : xis) pts.push_back({s, a, xi});
  return pts;
}

std::string describe(const std::vector<double>& v) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "}";
  return out.str();
}

// Soft points carry a = NaN.
// Deviation suite: max over points of |lhs - rhs|.
IdentityResult deviation_suite(const std::string& name, const std::string& grid_text,
                               const std::vector<Point>& pts, double tol, int threads,
                               const std::function<double(const Point&)>& deviation) {
  const auto devs = parallel_map(pts.size(), threads, [&](std::size_t i) { return deviation(pts[i]); });
  IdentityResult r{name, grid_text, static_cast<std::int64_t>(pts.size()), 0.0, tol, true};
  for (double d : devs) {
    if (!(d <= r.max_deviation)) r.max_deviation = std::isnan(d) ? std::numeric_limits<double>::infinity() : d;
  }
  r.pass = r.max_deviation < tol;
  return r;
}

double odd_part_e1_squared(double s, double a, double xi, bool hard, const Settings& st) {
  auto f = [&](double x) {
    const double sq = hard ? edgelaws::e1_hard_fredholm_squared(s, a, x, st)
                           : edgelaws::e1_soft_fredholm_squared(s, x, st);
    return sq * (2.0 - x);
  };
  return edgelaws::odd_even_parts(f, xi).odd;
}

double even_part_e1_squared(double s, double a, double xi, bool hard, const Settings& st) {
  auto f = [&](double x) {
    const double sq = hard ? edgelaws::e1_hard_fredholm_squared(s, a, x, st)
                           : edgelaws::e1_soft_fredholm_squared(s, x, st);
    return sq * (2.0 - x);
  };
  return edgelaws::odd_even_parts(f, xi).even;
}

double odd_part_e1(double s, double a, double xi, bool hard, const Settings& st) {
  auto f = [&](double x) {
    const double e1 = hard ? edgelaws::e1_hard(s, a, x, Method::Fredholm, st).value
                           : edgelaws::e1_soft(s, x, Method::Fredholm, st).value;
    return e1 * (2.0 - x);
  };
  return edgelaws::odd_even_parts(f, xi).odd;
}

IdentityResult monte_carlo(const std::string& name, const RunConfig& cfg) {
  const auto id = ensembles::identity_from_string(name);
  const bool hard = id == ensembles::Identity::A1h || id == ensembles::Identity::A2h;
  const double a = cfg.a_given ? cfg.a_values.front() : 1.0;
  double s = hard ? 2.0 : 1.0;
  if (cfg.s_given) s = cfg.s_values.front();
  const ensembles::Interval interval =
      hard ? ensembles::Interval{0.0, s} : ensembles::Interval{s, std::numeric_limits<double>::infinity()};
  const auto report = ensembles::verify_identity(id, cfg.n_size, interval, cfg.replicates, cfg.seed, a);
  std::ostringstream g;
  g << "N=" << cfg.n_size << " J=" << (hard ? "(0," : "(") << s << (hard ? ")" : ",inf)")
    << " R=" << cfg.replicates << " seed=" << cfg.seed;
  if (hard) g << " a=" << a;
  return {name, g.str(), static_cast<std::int64_t>(report.levels.size()), report.max_abs_z, 4.0, report.pass};
}

}  // namespace

IdentityResult check_identity(const std::string& name, const RunConfig& cfg) {
  const Settings& st = cfg.settings;
  const int th = cfg.threads;

  if (name == "df1") {
    auto pts = grid(kSoftS, {std::numeric_limits<double>::quiet_NaN()}, kDfXi);
    for (const auto& p : grid(kHardS, kHardA, kDfXi)) pts.push_back(p);
    return deviation_suite(
        name, "soft s" + describe(kSoftS) + " + hard a" + describe(kHardA) + " s" + describe(kHardS) +
                  ", xi" + describe(kDfXi),
        pts, 1e-8, th, [&](const Point& p) {
          if (!std::isnan(p.a))
            return std::abs(edgelaws::e2_hard(p.s, p.a, p.xi, Method::Fredholm, st).value -
                            edgelaws::e2_hard_factored(p.s, p.a, p.xi, st).value);
          return std::abs(edgelaws::e2_soft(p.s, p.xi, Method::Fredholm, st).value -
                          edgelaws::e2_soft_factored(p.s, p.xi, st).value);
        });
  }

  if (name == "routes" || name == "thm12") {
    const bool soft_part = name == "routes";
    const std::vector<double> soft_s{-4, -3, -2, -1, 0, 1, 2, 3, 4};
    const std::vector<double> hard_a = soft_part ? std::vector<double>{0, 2} : kHardA;
    const std::vector<double> hard_s = soft_part ? std::vector<double>{1, 4, 16} : kHardS;
    const std::vector<double> xis = soft_part ? std::vector<double>{0.5, 1.0}
                                              : std::vector<double>{0.25, 0.5, 0.75, 1.0};
    std::vector<Point> pts;
    if (soft_part) pts = grid(soft_s, {std::numeric_limits<double>::quiet_NaN()}, xis);
    for (const auto& p : grid(hard_s, hard_a, xis)) pts.push_back(p);
    std::string text = soft_part ? "soft s[-4:4:1], " : "";
    text += "hard a" + describe(hard_a) + " s" + describe(hard_s) + ", xi" + describe(xis) +
            "; E2, E1^2, E4, Eodd";
    return deviation_suite(name, text, pts, 1e-6, th, [&](const Point& p) {
      double d = 0.0;
      if (std::isnan(p.a)) {
        d = std::max(d, std::abs(edgelaws::e2_soft(p.s, p.xi, Method::Fredholm, st).value -
                                 edgelaws::e2_soft(p.s, p.xi, Method::Painleve, st).value));
        d = std::max(d, std::abs(edgelaws::e1_soft_squared(p.s, p.xi, st) -
                                 edgelaws::e1_soft_fredholm_squared(p.s, p.xi, st)));
        d = std::max(d, std::abs(edgelaws::e4_soft(p.s, p.xi, Method::Fredholm, st).value -
                                 edgelaws::e4_soft(p.s, p.xi, Method::Painleve, st).value));
        d = std::max(d, std::abs(edgelaws::e_odd_oe_soft(p.s, p.xi, Method::Fredholm, st) -
                                 edgelaws::e_odd_oe_soft(p.s, p.xi, Method::Painleve, st)));
      } else {
        d = std::max(d, std::abs(edgelaws::e2_hard(p.s, p.a, p.xi, Method::Fredholm, st).value -
                                 edgelaws::e2_hard(p.s, p.a, p.xi, Method::Painleve, st).value));
        d = std::max(d, std::abs(edgelaws::e1_hard_squared(p.s, p.a, p.xi, st) -
                                 edgelaws::e1_hard_fredholm_squared(p.s, p.a, p.xi, st)));
        d = std::max(d, std::abs(edgelaws::e4_hard(p.s, p.a, p.xi, Method::Fredholm, st).value -
                                 edgelaws::e4_hard(p.s, p.a, p.xi, Method::Painleve, st).value));
        d = std::max(d, std::abs(edgelaws::e_odd_oe_hard(p.s, p.a, p.xi, Method::Fredholm, st) -
                                 edgelaws::e_odd_oe_hard(p.s, p.a, p.xi, Method::Painleve, st)));
      }
      return d;
    });
  }

  if (name == "aE" || name == "cE" || name == "bE" || name == "aEh" || name == "cEh" || name == "bEh") {
    const bool hard = name.back() == 'h';
    const char kind = name[0];
    const auto pts = hard ? grid(kIdentityHardS, kHardA, kIdentityXi) : grid(kIdentitySoftS, {0.0}, kIdentityXi);
    const std::string text = (hard ? "hard a" + describe(kHardA) + " s" + describe(kIdentityHardS)
                                   : "soft s" + describe(kIdentitySoftS)) +
                             ", xi" + describe(kIdentityXi);
    return deviation_suite(name, text, pts, 1e-6, th, [&](const Point& p) {
      const double xb = edgelaws::xi_bar(p.xi);
      if (kind == 'a') {
        const double lhs = (1.0 - p.xi) * (hard ? edgelaws::e2_hard(p.s, p.a, xb, Method::Fredholm, st).value
                                                : edgelaws::e2_soft(p.s, xb, Method::Fredholm, st).value);
        return std::abs(lhs - odd_part_e1_squared(p.s, p.a, p.xi, hard, st));
      }
      if (kind == 'c') {
        const double lhs = hard ? edgelaws::e_odd_oe_hard(p.s, p.a, xb, Method::Fredholm, st)
                                : edgelaws::e_odd_oe_soft(p.s, xb, Method::Fredholm, st);
        return std::abs(lhs - even_part_e1_squared(p.s, p.a, p.xi, hard, st));
      }
      const double lhs = (1.0 - p.xi) * (hard ? edgelaws::e4_hard(p.s, p.a, xb, Method::Painleve, st).value
                                              : edgelaws::e4_soft(p.s, xb, Method::Painleve, st).value);
      return std::abs(lhs - odd_part_e1(p.s, p.a, p.xi, hard, st));
    });
  }

  if (name == "nsum") {
    std::vector<GapQuery> queries;
    for (int b : {1, 2, 4}) {
      for (double s : {-1.0, 0.0}) queries.push_back({edgelaws::Soft{}, edgelaws::beta_from_int(b), s, 1.0});
      queries.push_back({edgelaws::Hard{1.0}, edgelaws::beta_from_int(b), 2.0, 1.0});
    }
    const auto devs = parallel_map(queries.size(), th, [&](std::size_t i) {
      const auto levels = edgelaws::n_levels(queries[i], edgelaws::kMaxLevel, st);
      double sum = 0.0;
      for (double p : levels.probabilities) sum += p;
      return std::abs(sum - 1.0);
    });
    IdentityResult r{name, "beta{1,2,4}; soft s{-1,0}, hard (s,a)=(2,1); n<=12",
                     static_cast<std::int64_t>(devs.size()), 0.0, 1e-6, true};
    for (double d : devs) r.max_deviation = std::max(r.max_deviation, d);
    r.pass = r.max_deviation < r.tolerance;
    return r;
  }

  if (name == "bD" || name == "bDh") {
    const bool hard = name == "bDh";
    const edgelaws::Regime regime = hard ? edgelaws::Regime{edgelaws::Hard{1.0}} : edgelaws::Regime{edgelaws::Soft{}};
    const double s = hard ? 2.0 : 0.0;
    const int top = *std::max_element(cfg.levels.begin(), cfg.levels.end());
    const auto e4 = edgelaws::n_levels({regime, Beta::Four, s, 1.0}, top, st);
    const auto e1 = edgelaws::n_levels({regime, Beta::One, s, 1.0}, 2 * top + 1, st);
    IdentityResult r{name, std::string(hard ? "hard (s,a)=(2,1)" : "soft s=0") + ", n" +
                               describe(std::vector<double>(cfg.levels.begin(), cfg.levels.end())),
                     static_cast<std::int64_t>(cfg.levels.size()), 0.0, 1e-5, true};
    for (int n : cfg.levels) {
      const double d = std::abs(e4.probabilities[n] - e1.probabilities[2 * n] - e1.probabilities[2 * n + 1]);
      r.max_deviation = std::max(r.max_deviation, d);
    }
    r.pass = r.max_deviation < r.tolerance;
    return r;
  }

  if (name == "a1" || name == "a2" || name == "a1h" || name == "a2h") return monte_carlo(name, cfg);

  throw UsageError("unknown identity '" + name + "'");
}

Table run_verify(const RunConfig& cfg, bool& all_pass) {
  Table t;
  t.columns = {"identity", "grid", "points", "max_deviation", "tolerance", "pass"};
  all_pass = true;
  for (const auto& name : cfg.identities) {
    const auto r = check_identity(name, cfg);
    all_pass = all_pass && r.pass;
    t.rows.push_back({r.identity, r.grid, r.points, r.max_deviation, r.tolerance, r.pass});
  }
  t.summary.emplace_back("pass", all_pass);
  return t;
}

}  // namespace edgegap::cli
