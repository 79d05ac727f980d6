// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "edgegap/transcendents.hpp"

namespace edgegap::edgelaws {

using transcendents::Hard;
using transcendents::Regime;
using transcendents::Settings;
using transcendents::Soft;

enum class Beta { One = 1, Two = 2, Four = 4 };
enum class Method { Fredholm, Painleve };

const char* to_string(Method m);
int to_int(Beta b);
Beta beta_from_int(int b);

/// One generating-function evaluation request.
///
/// For the hard edge the regime carries the underlying Bessel order a of the
/// beta = 2 kernel. The order attached to the law itself depends on beta:
/// (a - 1)/2 for beta = 1, a for beta = 2, a + 1 for beta = 4. Only
/// bessel_index() performs that translation.
struct GapQuery {
  Regime regime = Soft{};
  Beta beta = Beta::Two;
  double s = 0.0;
  double xi = 1.0;
  Method method = Method::Fredholm;

  bool is_hard() const;
  double underlying_a() const;
  double bessel_index() const;

  /// Builds a hard-edge query from the order of the law itself.
  static GapQuery hard_with_index(Beta beta, double index, double s, double xi,
                                  Method method = Method::Fredholm);
};

struct Diagnostics {
  int quad_order;
  double truncation;
  Method route;
};

struct GeneratingFunctionValue {
  double value;
  GapQuery query;
  Diagnostics diagnostics;
};

/// 2 xi - xi^2.
double xi_bar(double xi);

/// Square root that tolerates rounding-level negatives (>= -1e-9, clamped to 0).
double checked_sqrt(double v);

// Soft edge, interval (s, inf).
GeneratingFunctionValue e2_soft(double s, double xi, Method method, const Settings& settings = {});
GeneratingFunctionValue e2_soft_factored(double s, double xi, const Settings& settings = {});
double e1_soft_squared(double s, double xi, const Settings& settings = {});
double e1_soft_fredholm_squared(double s, double xi, const Settings& settings = {});
GeneratingFunctionValue e1_soft(double s, double xi, Method method, const Settings& settings = {});
GeneratingFunctionValue e4_soft(double s, double xi, Method method, const Settings& settings = {});
double e_odd_oe_soft(double s, double xi, Method method, const Settings& settings = {});

// Hard edge, interval (0, s); `a` is the underlying order (see GapQuery).
GeneratingFunctionValue e2_hard(double s, double a, double xi, Method method,
                                const Settings& settings = {});
GeneratingFunctionValue e2_hard_factored(double s, double a, double xi, const Settings& settings = {});
double e1_hard_squared(double s, double a, double xi, const Settings& settings = {});
double e1_hard_fredholm_squared(double s, double a, double xi, const Settings& settings = {});
GeneratingFunctionValue e1_hard(double s, double a, double xi, Method method,
                                const Settings& settings = {});
GeneratingFunctionValue e4_hard(double s, double a, double xi, Method method,
                                const Settings& settings = {});
double e_odd_oe_hard(double s, double a, double xi, Method method, const Settings& settings = {});

/// Dispatches on regime and beta.
GeneratingFunctionValue evaluate(const GapQuery& query, const Settings& settings = {});

struct OddEven {
  double odd;
  double even;
};

/// Parts of F odd / even in (1 - xi): (F(xi) -/+ F(2 - xi)) / 2.
OddEven odd_even_parts(const std::function<double(double)>& f, double xi);

struct NLevels {
  std::vector<double> probabilities;  // E(n; J), n = 0..n_max
  double max_derivative;              // max_n |d^n E / d xi^n| at xi = 1
  bool ill_conditioned;               // max_derivative > 1e6
};

constexpr int kMaxLevel = 12;

/// E(n; J) for n = 0..n_max from a degree-24 Chebyshev interpolant of
/// E(J; xi) on xi in [0, 2]. query.xi is ignored.
NLevels n_levels(const GapQuery& query, int n_max, const Settings& settings = {});
double n_level(const GapQuery& query, int n, const Settings& settings = {});

}  // namespace edgegap::edgelaws
