// SPDX-License-Identifier: Apache-2.0
#include "edgegap/edgelaws.hpp"

#include <cmath>
#include <string>

#include "edgegap/error.hpp"
#include "edgegap/fredholm.hpp"

namespace edgegap::edgelaws {

using transcendents::mu_hard;
using transcendents::mu_soft;

const char* to_string(Method m) { return m == Method::Fredholm ? "fredholm" : "painleve"; }

int to_int(Beta b) { return static_cast<int>(b); }

Beta beta_from_int(int b) {
  switch (b) {
    case 1: return Beta::One;
    case 2: return Beta::Two;
    case 4: return Beta::Four;
  }
  throw DomainError("beta must be 1, 2 or 4, got " + std::to_string(b));
}

bool GapQuery::is_hard() const { return std::holds_alternative<Hard>(regime); }

double GapQuery::underlying_a() const {
  if (const auto* h = std::get_if<Hard>(&regime)) return h->a;
  throw DomainError("GapQuery: soft-edge query has no Bessel order");
}

double GapQuery::bessel_index() const {
  const double a = underlying_a();
  switch (beta) {
    case Beta::One: return (a - 1.0) / 2.0;
    case Beta::Two: return a;
    case Beta::Four: return a + 1.0;
  }
  return a;
}

GapQuery GapQuery::hard_with_index(Beta beta, double index, double s, double xi, Method method) {
  double a = index;
  if (beta == Beta::One) a = 2.0 * index + 1.0;
  if (beta == Beta::Four) a = index - 1.0;
  if (!(a > -1.0)) throw DomainError("hard-edge index maps to a Bessel order <= -1");
  return {Hard{a}, beta, s, xi, method};
}

double xi_bar(double xi) { return 2.0 * xi - xi * xi; }

double checked_sqrt(double v) {
  if (v < -1e-9) throw DomainError("checked_sqrt: negative argument " + std::to_string(v));
  return v <= 0.0 ? 0.0 : std::sqrt(v);
}

namespace {

constexpr double kPoleGap = 1e-6;

void check_xi(double xi) {
  if (!(xi >= 0.0 && xi <= 2.0)) throw DomainError("xi must lie in [0, 2]");
}

void check_not_pole(double xi) {
  check_xi(xi);
  if (std::abs(xi - 2.0) < kPoleGap) throw DomainError("xi = 2 is a pole of the beta = 1 formulas");
}

// det(I - r V) and det(I + r V) for the edge's V operator.
struct DetPair {
  double minus;
  double plus;
};

DetPair v_dets(const Regime& regime, double s, double r, const Settings& settings) {
  if (r == 0.0) return {1.0, 1.0};
  const auto op = std::holds_alternative<Hard>(regime)
                      ? fredholm::v_hard(s, std::get<Hard>(regime).a)
                      : fredholm::v_soft(s, settings.truncation);
  const auto rule = fredholm::discretize(op, settings.quad_order);
  return {fredholm::fredholm_det(op, r, rule), fredholm::fredholm_det(op, -r, rule)};
}

double k_det(const Regime& regime, double s, double xi, const Settings& settings) {
  const auto op = std::holds_alternative<Hard>(regime)
                      ? fredholm::k_hard(s, std::get<Hard>(regime).a)
                      : fredholm::k_soft(s, settings.truncation);
  return fredholm::fredholm_det(op, xi, fredholm::discretize(op, settings.quad_order));
}

double mu_of(const Regime& regime, double s, double xi, const Settings& settings) {
  if (const auto* h = std::get_if<Hard>(&regime)) return mu_hard(s, h->a, xi, settings).value;
  return mu_soft(s, xi, settings).value;
}

double e2_value(const Regime& regime, double s, double xi, Method method, const Settings& settings) {
  check_xi(xi);
  if (xi == 0.0) return 1.0;
  if (method == Method::Fredholm) return k_det(regime, s, xi, settings);
  if (const auto* h = std::get_if<Hard>(&regime)) {
    return std::exp(-transcendents::hard_log_gap_exponent(s, h->a, xi, settings));
  }
  return std::exp(-transcendents::soft_log_gap_exponent(s, xi, settings));
}

double e2_factored_value(const Regime& regime, double s, double xi, const Settings& settings) {
  check_xi(xi);
  const auto d = v_dets(regime, s, std::sqrt(xi), settings);
  return d.minus * d.plus;
}

// E_2(xi_bar) (xi - 1 - cosh mu(xi_bar) + sqrt(xi_bar) sinh mu(xi_bar)) / (xi - 2)
double e1_squared_painleve(const Regime& regime, double s, double xi, const Settings& settings) {
  check_not_pole(xi);
  const double xb = xi_bar(xi);
  const double e2 = e2_value(regime, s, xb, Method::Painleve, settings);
  const double mu = mu_of(regime, s, xb, settings);
  return e2 * (xi - 1.0 - std::cosh(mu) + std::sqrt(xb) * std::sinh(mu)) / (xi - 2.0);
}

double e1_squared_fredholm(const Regime& regime, double s, double xi, const Settings& settings) {
  check_not_pole(xi);
  const double r = std::sqrt(xi_bar(xi));
  const auto d = v_dets(regime, s, r, settings);
  const double den = xi - 2.0;
  return (xi - 1.0) / den * d.minus * d.plus + (r - 1.0) / (2.0 * den) * d.plus * d.plus -
         (r + 1.0) / (2.0 * den) * d.minus * d.minus;
}

// The beta = 1 square is the perfect square (alpha D+ + beta D-)^2 with
// D-+ = det(I -+ sqrt(xi_bar) V), alpha^2 = (1 - r)/(2(2 - xi)),
// beta^2 = (1 + r)/(2(2 - xi)), 2 alpha beta = (1 - xi)/(2 - xi). Taking this
// root keeps E_1 analytic through xi = 1, where it may change sign for xi > 1.
struct RootCoefficients {
  double alpha;  // multiplies D+
  double beta;   // multiplies D-
};

RootCoefficients e1_root_coefficients(double xi) {
  const double r = std::sqrt(xi_bar(xi));
  const double u = 1.0 - xi;
  const double one_minus_r = u * u / (1.0 + r);
  const double den = 2.0 * (2.0 - xi);
  const double alpha = std::copysign(std::sqrt(one_minus_r / den), u);
  return {u == 0.0 ? 0.0 : alpha, std::sqrt((1.0 + r) / den)};
}

double e1_value(const Regime& regime, double s, double xi, Method method, const Settings& settings) {
  check_not_pole(xi);
  if (xi == 0.0) return 1.0;
  const auto c = e1_root_coefficients(xi);
  const double xb = xi_bar(xi);
  if (method == Method::Fredholm) {
    const auto d = v_dets(regime, s, std::sqrt(xb), settings);
    return c.alpha * d.plus + c.beta * d.minus;
  }
  // D-+ = sqrt(E_2(xi_bar)) exp(-+ mu(xi_bar) / 2)
  const double root_e2 = checked_sqrt(e2_value(regime, s, xb, Method::Painleve, settings));
  const double half_mu = 0.5 * mu_of(regime, s, xb, settings);
  return root_e2 * (c.alpha * std::exp(half_mu) + c.beta * std::exp(-half_mu));
}

double e4_value(const Regime& regime, double s, double xi, Method method, const Settings& settings) {
  check_xi(xi);
  if (xi == 0.0) return 1.0;
  if (method == Method::Fredholm) {
    const auto d = v_dets(regime, s, std::sqrt(xi), settings);
    return 0.5 * (d.minus + d.plus);
  }
  const double e2 = e2_value(regime, s, xi, Method::Painleve, settings);
  const double mu = mu_of(regime, s, xi, settings);
  return checked_sqrt(e2) * std::cosh(0.5 * mu);
}

double e_odd_value(const Regime& regime, double s, double xi, Method method, const Settings& settings) {
  check_xi(xi);
  if (xi == 0.0) return 1.0;
  if (method == Method::Fredholm) {
    if (const auto* h = std::get_if<Hard>(&regime)) {
      const auto op = fredholm::k_hard(s, h->a);
      return fredholm::fredholm_det_rank_one(op, fredholm::hard_augmentation(h->a), xi,
                                             fredholm::discretize(op, settings.quad_order));
    }
    const auto op = fredholm::k_soft(s, settings.truncation);
    return fredholm::fredholm_det_rank_one(op, fredholm::soft_augmentation(), xi,
                                           fredholm::discretize(op, settings.quad_order));
  }
  const double e2 = e2_value(regime, s, xi, Method::Painleve, settings);
  const double mu = mu_of(regime, s, xi, settings);
  return e2 * (std::cosh(mu) - std::sqrt(xi) * std::sinh(mu));
}

GeneratingFunctionValue wrap(double value, Regime regime, Beta beta, double s, double xi,
                             Method method, const Settings& settings) {
  const double truncation =
      std::holds_alternative<Hard>(regime) ? 0.0 : quad::soft_truncation(s, settings.truncation);
  return {value, GapQuery{regime, beta, s, xi, method}, {settings.quad_order, truncation, method}};
}

void check_hard(double s, double a) {
  if (!(s > 0.0)) throw DomainError("hard edge needs s > 0");
  if (!(a > -1.0)) throw DomainError("hard edge needs a > -1");
}

}  // namespace

GeneratingFunctionValue e2_soft(double s, double xi, Method method, const Settings& settings) {
  return wrap(e2_value(Soft{}, s, xi, method, settings), Soft{}, Beta::Two, s, xi, method, settings);
}

GeneratingFunctionValue e2_soft_factored(double s, double xi, const Settings& settings) {
  return wrap(e2_factored_value(Soft{}, s, xi, settings), Soft{}, Beta::Two, s, xi,
              Method::Fredholm, settings);
}

double e1_soft_squared(double s, double xi, const Settings& settings) {
  return e1_squared_painleve(Soft{}, s, xi, settings);
}

double e1_soft_fredholm_squared(double s, double xi, const Settings& settings) {
  return e1_squared_fredholm(Soft{}, s, xi, settings);
}

GeneratingFunctionValue e1_soft(double s, double xi, Method method, const Settings& settings) {
  return wrap(e1_value(Soft{}, s, xi, method, settings), Soft{}, Beta::One, s, xi, method, settings);
}

GeneratingFunctionValue e4_soft(double s, double xi, Method method, const Settings& settings) {
  return wrap(e4_value(Soft{}, s, xi, method, settings), Soft{}, Beta::Four, s, xi, method, settings);
}

double e_odd_oe_soft(double s, double xi, Method method, const Settings& settings) {
  return e_odd_value(Soft{}, s, xi, method, settings);
}

GeneratingFunctionValue e2_hard(double s, double a, double xi, Method method,
                                const Settings& settings) {
  check_hard(s, a);
  return wrap(e2_value(Hard{a}, s, xi, method, settings), Hard{a}, Beta::Two, s, xi, method, settings);
}

GeneratingFunctionValue e2_hard_factored(double s, double a, double xi, const Settings& settings) {
  check_hard(s, a);
  return wrap(e2_factored_value(Hard{a}, s, xi, settings), Hard{a}, Beta::Two, s, xi,
              Method::Fredholm, settings);
}

double e1_hard_squared(double s, double a, double xi, const Settings& settings) {
  check_hard(s, a);
  return e1_squared_painleve(Hard{a}, s, xi, settings);
}

double e1_hard_fredholm_squared(double s, double a, double xi, const Settings& settings) {
  check_hard(s, a);
  return e1_squared_fredholm(Hard{a}, s, xi, settings);
}

GeneratingFunctionValue e1_hard(double s, double a, double xi, Method method,
                                const Settings& settings) {
  check_hard(s, a);
  return wrap(e1_value(Hard{a}, s, xi, method, settings), Hard{a}, Beta::One, s, xi, method, settings);
}

GeneratingFunctionValue e4_hard(double s, double a, double xi, Method method,
                                const Settings& settings) {
  check_hard(s, a);
  return wrap(e4_value(Hard{a}, s, xi, method, settings), Hard{a}, Beta::Four, s, xi, method, settings);
}

double e_odd_oe_hard(double s, double a, double xi, Method method, const Settings& settings) {
  check_hard(s, a);
  return e_odd_value(Hard{a}, s, xi, method, settings);
}

GeneratingFunctionValue evaluate(const GapQuery& q, const Settings& settings) {
  if (q.is_hard()) {
    const double a = q.underlying_a();
    switch (q.beta) {
      case Beta::One: return e1_hard(q.s, a, q.xi, q.method, settings);
      case Beta::Two: return e2_hard(q.s, a, q.xi, q.method, settings);
      case Beta::Four: return e4_hard(q.s, a, q.xi, q.method, settings);
    }
  }
  switch (q.beta) {
    case Beta::One: return e1_soft(q.s, q.xi, q.method, settings);
    case Beta::Two: return e2_soft(q.s, q.xi, q.method, settings);
    case Beta::Four: return e4_soft(q.s, q.xi, q.method, settings);
  }
  throw DomainError("evaluate: unknown beta");
}

OddEven odd_even_parts(const std::function<double(double)>& f, double xi) {
  check_xi(xi);
  const double here = f(xi);
  const double mirror = f(2.0 - xi);
  return {0.5 * (here - mirror), 0.5 * (here + mirror)};
}

}  // namespace edgegap::edgelaws
