// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "edgegap/edgelaws.hpp"
#include "edgegap/error.hpp"

namespace edgegap::edgelaws {
namespace {

constexpr int kNodes = 25;  // degree-24 interpolant

// Power-basis coefficients of sum_j c_j T_j(t).
std::array<double, kNodes> chebyshev_to_monomial(const std::array<double, kNodes>& c) {
  std::array<double, kNodes> out{};
  std::array<double, kNodes> prev{};  // T_{j-1}
  std::array<double, kNodes> cur{};   // T_j
  prev[0] = 1.0;                      // T_0
  cur[1] = 1.0;                       // T_1
  out[0] += c[0];
  out[1] += c[1];
  for (int j = 2; j < kNodes; ++j) {
    std::array<double, kNodes> next{};
    for (int k = 0; k < kNodes; ++k) {
      if (k > 0) next[k] += 2.0 * cur[k - 1];
      next[k] -= prev[k];
    }
    for (int k = 0; k < kNodes; ++k) out[k] += c[j] * next[k];
    prev = cur;
    cur = next;
  }
  return out;
}

}  // namespace

NLevels n_levels(const GapQuery& query, int n_max, const Settings& settings) {
  if (n_max < 0 || n_max > kMaxLevel) throw DomainError("n_level: n must lie in [0, 12]");
  // Chebyshev points of the first kind, xi = 1 + t; none touches the xi = 2 pole
  // of the beta = 1 formulas.
  std::array<double, kNodes> values{};
  std::array<double, kNodes> theta{};
  for (int k = 0; k < kNodes; ++k) {
    theta[k] = std::numbers::pi * (2.0 * k + 1.0) / (2.0 * kNodes);
    GapQuery q = query;
    q.xi = 1.0 + std::cos(theta[k]);
    values[k] = evaluate(q, settings).value;
  }
  std::array<double, kNodes> c{};
  for (int j = 0; j < kNodes; ++j) {
    double sum = 0.0;
    for (int k = 0; k < kNodes; ++k) sum += values[k] * std::cos(j * theta[k]);
    c[j] = 2.0 / kNodes * sum;
  }
  c[0] *= 0.5;
  const auto power = chebyshev_to_monomial(c);
  // E(J; xi) = sum_n (1 - xi)^n E(n; J) and t = xi - 1, so E(n) = (-1)^n [t^n].
  NLevels out{{}, 0.0, false};
  double factorial = 1.0;
  for (int n = 0; n <= kMaxLevel; ++n) {
    if (n > 0) factorial *= n;
    out.max_derivative = std::max(out.max_derivative, std::abs(power[n]) * factorial);
    if (n <= n_max) out.probabilities.push_back(n % 2 == 0 ? power[n] : -power[n]);
  }
  out.ill_conditioned = out.max_derivative > 1e6;
  return out;
}

double n_level(const GapQuery& query, int n, const Settings& settings) {
  return n_levels(query, n, settings).probabilities.at(n);
}

}  // namespace edgegap::edgelaws
