// SPDX-License-Identifier: Apache-2.0
#include "edgegap/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "edgegap/error.hpp"

namespace edgegap::specfun {
namespace {

constexpr double kTableLo = -20.0;
constexpr double kTableHi = 10.0;
constexpr double kStep = 0.5;
constexpr int kTableSize = static_cast<int>((kTableHi - kTableLo) / kStep) + 1;

// 3^(-2/3) / Gamma(2/3) and -3^(-1/3) / Gamma(1/3)
constexpr double kAiZero = 0.35502805388781723926;
constexpr double kAipZero = -0.25881940379280679840;

struct AiryPair {
  double ai;
  double aip;
};

// Taylor expansion of y'' = x y about x0, evaluated at x0 + d.
AiryPair taylor_step(double x0, AiryPair at, double d) {
  double cm1 = 0.0;         // c_{k-1}
  double c0 = at.ai;        // c_k, k = 0
  double c1 = at.aip;       // c_{k+1}
  double value = c0 + c1 * d;
  double deriv = c1;
  double pw = d;            // d^k for the derivative term, k = 1
  double scale = std::abs(c0) + std::abs(c1);
  int quiet = 0;
  for (int k = 0; k < 120; ++k) {
    // c_{k+2} = (x0 c_k + c_{k-1}) / ((k+2)(k+1))
    const double c2 = (x0 * c0 + cm1) / static_cast<double>((k + 2) * (k + 1));
    const double term_v = c2 * pw * d;                     // c_{k+2} d^{k+2}
    const double term_d = static_cast<double>(k + 2) * c2 * pw;  // (k+2) c_{k+2} d^{k+1}
    value += term_v;
    deriv += term_d;
    pw *= d;
    if (std::abs(term_v) + std::abs(term_d) <= 1e-18 * scale) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
    cm1 = c0;
    c0 = c1;
    c1 = c2;
  }
  return {value, deriv};
}

// Coefficients u_k of the large-argument expansions; v_k = -(6k+1)/(6k-1) u_k.
struct AsymptoticCoefficients {
  static constexpr int kCount = 80;
  std::array<double, kCount> u{};
  std::array<double, kCount> v{};
  AsymptoticCoefficients() {
    u[0] = 1.0;
    v[0] = 1.0;
    for (int k = 1; k < kCount; ++k) {
      u[k] = u[k - 1] * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
             ((2.0 * k - 1.0) * 216.0 * k);
      v[k] = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u[k];
    }
  }
};

const AsymptoticCoefficients& coefficients() {
  static const AsymptoticCoefficients c;
  return c;
}

// Sums sum_k (-1)^k c_k / zeta^k with optimal truncation.
template <class Coef>
double alternating_series(const Coef& c, double zeta, int start, int stride) {
  double sum = 0.0;
  double prev = HUGE_VAL;
  double sign = 1.0;
  for (int k = start; k < AsymptoticCoefficients::kCount; k += stride) {
    const double term = c[k] / std::pow(zeta, k);
    if (std::abs(term) > prev) break;
    sum += sign * term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    prev = std::abs(term);
    sign = -sign;
  }
  return sum;
}

AiryPair asymptotic_positive(double x) {
  const auto& c = coefficients();
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  const double q = std::sqrt(std::sqrt(x));
  const double pre = std::exp(-zeta) / (2.0 * std::sqrt(std::numbers::pi));
  const double su = alternating_series(c.u, zeta, 0, 1);
  const double sv = alternating_series(c.v, zeta, 0, 1);
  return {pre / q * su, -pre * q * sv};
}

AiryPair asymptotic_negative(double x) {
  const auto& c = coefficients();
  const double z = -x;
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  const double q = std::sqrt(std::sqrt(z));
  const double phase = zeta - std::numbers::pi / 4.0;
  const double cs = std::cos(phase);
  const double sn = std::sin(phase);
  const double u_even = alternating_series(c.u, zeta, 0, 2);
  const double u_odd = alternating_series(c.u, zeta, 1, 2);
  const double v_even = alternating_series(c.v, zeta, 0, 2);
  const double v_odd = alternating_series(c.v, zeta, 1, 2);
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  const double ai = inv_sqrt_pi / q * (cs * u_even + sn * u_odd);
  const double aip = inv_sqrt_pi * q * (sn * v_even - cs * v_odd);
  return {ai, aip};
}

struct AiryTable {
  std::array<AiryPair, kTableSize> nodes{};
  AiryTable() {
    const int origin = static_cast<int>(-kTableLo / kStep);
    nodes[kTableSize - 1] = asymptotic_positive(kTableHi);
    for (int i = kTableSize - 1; i > origin; --i) {
      nodes[i - 1] = taylor_step(node_x(i), nodes[i], -kStep);
    }
    // The backward sweep lands on x = 0 with rounding-level error; the exact
    // values seed the oscillatory side.
    nodes[origin] = {kAiZero, kAipZero};
    for (int i = origin; i > 0; --i) {
      nodes[i - 1] = taylor_step(node_x(i), nodes[i], -kStep);
    }
  }
  static double node_x(int i) { return kTableLo + kStep * i; }
};

const AiryTable& table() {
  static const AiryTable t;
  return t;
}

AiryPair evaluate(double x) {
  if (!std::isfinite(x) || std::abs(x) > 1e3) {
    throw DomainError("airy: argument out of range: " + std::to_string(x));
  }
  if (x > kTableHi) return asymptotic_positive(x);
  if (x < kTableLo) return asymptotic_negative(x);
  const auto& t = table();
  const int i = static_cast<int>(std::lround((x - kTableLo) / kStep));
  const double x0 = AiryTable::node_x(i);
  if (x == x0) return t.nodes[i];
  return taylor_step(x0, t.nodes[i], x - x0);
}

}  // namespace

double airy_ai(double x) { return evaluate(x).ai; }

double airy_ai_prime(double x) { return evaluate(x).aip; }

}  // namespace edgegap::specfun
