// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "edgegap/error.hpp"
#include "edgegap/quad.hpp"

namespace edgegap::quad {

QuadratureRule gauss_legendre(int m) {
  if (m < kMinOrder || m > kMaxOrder) {
    throw DomainError("gauss_legendre: order must lie in [2, 512], got " + std::to_string(m));
  }
  QuadratureRule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  const int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th largest root, then Newton.
    const double theta = std::numbers::pi * (4.0 * i + 3.0) / (4.0 * m + 2.0);
    double x = (1.0 - (m - 1.0) / (8.0 * m * m * m)) * std::cos(theta);
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      // p1 = P_m(x), p0 = P_{m-1}(x)
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16 * std::max(1.0, std::abs(x))) {
        // one more pass to refresh dp at the converged root
        double q0 = 1.0;
        double q1 = x;
        for (int k = 2; k <= m; ++k) {
          const double q2 = ((2.0 * k - 1.0) * x * q1 - (k - 1.0) * q0) / k;
          q0 = q1;
          q1 = q2;
        }
        dp = m * (x * q1 - q0) / (x * x - 1.0);
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[m - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[m - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (m % 2 == 1) rule.nodes[m / 2] = 0.0;
  return rule;
}

const QuadratureRule& cached_gauss_legendre(int m) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<QuadratureRule>(gauss_legendre(m));
  return *slot;
}

bool same_domain(const Domain& a, const Domain& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, Reference>) {
          return true;
        } else if constexpr (std::is_same_v<T, SemiInfinite>) {
          return x.lo == y.lo && x.truncation == y.truncation;
        } else {
          return x.lo == y.lo && x.hi == y.hi;
        }
      },
      a);
}

double domain_lo(const Domain& d) {
  return std::visit(
      [](const auto& x) -> double {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Reference>) return -1.0;
        else return x.lo;
      },
      d);
}

double domain_hi(const Domain& d) {
  return std::visit(
      [](const auto& x) -> double {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Reference>) return 1.0;
        else if constexpr (std::is_same_v<T, SemiInfinite>) return x.lo + x.truncation;
        else return x.hi;
      },
      d);
}

QuadratureRule map_rule(const QuadratureRule& rule, const Domain& domain) {
  if (!std::holds_alternative<Reference>(rule.mapping)) {
    throw DomainError("map_rule: rule is already mapped");
  }
  const double lo = domain_lo(domain);
  const double hi = domain_hi(domain);
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw DomainError("map_rule: degenerate interval");
  }
  QuadratureRule out;
  out.mapping = domain;
  out.nodes.resize(rule.size());
  out.weights.resize(rule.size());
  const double len = hi - lo;
  if (std::holds_alternative<SquareRoot>(domain)) {
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double u = 0.5 * (rule.nodes[i] + 1.0);
      out.nodes[i] = lo + len * u * u;
      out.weights[i] = 0.5 * rule.weights[i] * 2.0 * len * u;
    }
  } else {
    for (std::size_t i = 0; i < rule.size(); ++i) {
      out.nodes[i] = lo + 0.5 * len * (rule.nodes[i] + 1.0);
      out.weights[i] = 0.5 * len * rule.weights[i];
    }
  }
  return out;
}

double soft_truncation(double s, double base) { return std::max(base, 12.0 - s); }

}  // namespace edgegap::quad
