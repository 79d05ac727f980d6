// SPDX-License-Identifier: Apache-2.0
#include "edgegap/transcendents.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "edgegap/error.hpp"
#include "edgegap/fredholm.hpp"
#include "edgegap/specfun.hpp"

namespace edgegap::transcendents {
namespace {

void check_xi(double xi) {
  if (!(xi >= 0.0 && xi <= 2.0)) throw DomainError("transcendents: xi must lie in [0, 2]");
}

void check_hard(double s, double a) {
  if (!(a > -1.0)) throw DomainError("transcendents: Bessel order must exceed -1");
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("transcendents: hard edge needs s > 0");
}

// Fixed 8-point rule for short stretches between nearby points.
const quad::QuadratureRule& short_rule() { return quad::cached_gauss_legendre(8); }

template <class F>
double short_integral(F&& f, double lo, double hi) {
  // Panels of length <= 1 keep the 8-point rule accurate on long gaps.
  const auto& r = short_rule();
  const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(hi - lo))));
  const double width = (hi - lo) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * width;
    double sum = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) sum += r.weights[i] * f(mid + 0.5 * width * r.nodes[i]);
    total += 0.5 * width * sum;
  }
  return total;
}

double q_at(const Regime& regime, double t, double xi, const Settings& settings) {
  if (const auto* h = std::get_if<Hard>(&regime)) return q_hard(t, h->a, xi, settings);
  return q_soft(t, xi, settings);
}

double mu_at(const Regime& regime, double t, double xi, const Settings& settings) {
  if (const auto* h = std::get_if<Hard>(&regime)) return mu_hard(t, h->a, xi, settings).value;
  return mu_soft(t, xi, settings).value;
}

// Change of mu between s and s + d, using only q on the short stretch.
double mu_shift(const Regime& regime, double s, double d, double xi, const Settings& settings) {
  if (d == 0.0) return 0.0;
  if (const auto* h = std::get_if<Hard>(&regime)) {
    const double a = h->a;
    // (1/2) int q(t) t^{-1/2} dt = int q(u^2) du over sqrt(s)..sqrt(s + d).
    return short_integral([&](double u) { return q_hard(u * u, a, xi, settings); }, std::sqrt(s),
                          std::sqrt(s + d));
  }
  return -short_integral([&](double t) { return q_soft(t, xi, settings); }, s, s + d);
}

struct Stencil {
  double first;
  double second;
};

// Five-point central differences of f at t with step h.
template <class F>
Stencil stencil(F&& f, double t, double h) {
  const double m2 = f(t - 2.0 * h);
  const double m1 = f(t - h);
  const double c0 = f(t);
  const double p1 = f(t + h);
  const double p2 = f(t + 2.0 * h);
  return {(m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h),
          (-m2 + 16.0 * m1 - 30.0 * c0 + 16.0 * p1 - p2) / (12.0 * h * h)};
}

}  // namespace

double q_soft(double s, double xi, const Settings& settings) {
  check_xi(xi);
  if (xi == 0.0) return 0.0;
  const double root = std::sqrt(xi);
  const auto op = fredholm::k_soft(s, settings.truncation);
  const auto rule = fredholm::discretize(op, settings.quad_order);
  return fredholm::resolvent_at_endpoint(
      op, [root](double x) { return root * specfun::airy_ai(x); }, xi, rule, s);
}

double q_hard(double s, double a, double xi, const Settings& settings) {
  check_xi(xi);
  check_hard(s, a);
  if (xi == 0.0) return 0.0;
  const double root = std::sqrt(xi);
  const auto op = fredholm::k_hard(s, a);
  const auto rule = fredholm::discretize(op, settings.quad_order);
  return fredholm::resolvent_at_endpoint(
      op, [root, a](double x) { return root * specfun::bessel_j(a, std::sqrt(x)); }, xi, rule, s);
}

MuValue mu_soft(double s, double xi, const Settings& settings) {
  check_xi(xi);
  if (xi == 0.0) return {s, xi, 0.0};
  const auto rule = quad::map_rule(quad::cached_gauss_legendre(settings.quad_order),
                                   quad::SemiInfinite{s, quad::soft_truncation(s, settings.truncation)});
  const double value = rule.integrate([&](double t) { return q_soft(t, xi, settings); });
  return {s, xi, value};
}

MuValue mu_hard(double s, double a, double xi, const Settings& settings) {
  check_xi(xi);
  check_hard(s, a);
  if (xi == 0.0) return {s, xi, 0.0};
  // t = s u^2 turns q~(t) t^{-1/2} dt into a smooth integrand in u.
  const auto rule = quad::map_rule(quad::cached_gauss_legendre(settings.quad_order),
                                   quad::SquareRoot{0.0, s});
  const double value =
      0.5 * rule.integrate([&](double t) { return q_hard(t, a, xi, settings) / std::sqrt(t); });
  return {s, xi, value};
}

double soft_log_gap_exponent(double s, double xi, const Settings& settings) {
  check_xi(xi);
  if (xi == 0.0) return 0.0;
  const auto rule = quad::map_rule(quad::cached_gauss_legendre(settings.quad_order),
                                   quad::SemiInfinite{s, quad::soft_truncation(s, settings.truncation)});
  return rule.integrate([&](double t) {
    const double q = q_soft(t, xi, settings);
    return (t - s) * q * q;
  });
}

double hard_log_gap_exponent(double s, double a, double xi, const Settings& settings) {
  check_xi(xi);
  check_hard(s, a);
  if (xi == 0.0) return 0.0;
  // t = s v^4: (1/4) log(s/t) dt = -4 s v^3 log(v) dv, smooth at v = 0.
  const auto& ref = quad::cached_gauss_legendre(settings.quad_order);
  double sum = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const double v = 0.5 * (ref.nodes[i] + 1.0);
    const double w = 0.5 * ref.weights[i];
    const double v2 = v * v;
    const double q = q_hard(s * v2 * v2, a, xi, settings);
    sum += w * (-4.0 * s * v2 * v * std::log(v)) * q * q;
  }
  return sum;
}

double painleve2_residual(double t, double xi, const Settings& settings, double h) {
  const auto d = stencil([&](double x) { return q_soft(x, xi, settings); }, t, h);
  const double q = q_soft(t, xi, settings);
  return std::abs(d.second - t * q - 2.0 * q * q * q);
}

double hard_residual(double t, double a, double xi, const Settings& settings, double h) {
  if (!(t - 2.0 * h > 0.0)) throw DomainError("hard_residual: stencil leaves (0, inf)");
  const auto d = stencil([&](double x) { return q_hard(x, a, xi, settings); }, t, h);
  const double q = q_hard(t, a, xi, settings);
  const double tq1 = t * d.first;
  const double lhs = t * (q * q - 1.0) * (d.first + t * d.second);
  const double rhs = q * tq1 * tq1 + 0.25 * (t - a * a) * q + 0.25 * t * q * q * q * (q * q - 2.0);
  return std::abs(lhs - rhs);
}

TranscendentTrace trace(const Regime& regime, double xi, std::span<const double> grid,
                        const Settings& settings) {
  check_xi(xi);
  if (grid.empty()) throw DomainError("trace: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw DomainError("trace: grid must be strictly increasing");
  }
  TranscendentTrace out{regime, xi, {grid.begin(), grid.end()}, {}, {}, {}};
  const std::size_t n = grid.size();
  out.values.resize(n);
  out.residuals.assign(n, 0.0);
  out.mu.resize(n);
  const auto* hard = std::get_if<Hard>(&regime);
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = q_at(regime, grid[i], xi, settings);
    if (xi == 0.0) continue;
    if (hard) {
      if (grid[i] - 2.0 * kStencilStep > 0.0) {
        out.residuals[i] = hard_residual(grid[i], hard->a, xi, settings);
      }
    } else {
      out.residuals[i] = painleve2_residual(grid[i], xi, settings);
    }
  }
  if (hard) {
    out.mu[0] = mu_at(regime, grid[0], xi, settings);
    for (std::size_t i = 1; i < n; ++i) {
      out.mu[i] = out.mu[i - 1] + mu_shift(regime, grid[i - 1], grid[i] - grid[i - 1], xi, settings);
    }
  } else {
    out.mu[n - 1] = mu_at(regime, grid[n - 1], xi, settings);
    for (std::size_t i = n - 1; i-- > 0;) {
      out.mu[i] = out.mu[i + 1] + mu_shift(regime, grid[i + 1], grid[i] - grid[i + 1], xi, settings);
    }
  }
  return out;
}

CoupledState coupled_state(const Regime& regime, double mu, double xi) {
  const double root = std::sqrt(xi);
  const double c = std::cosh(mu);
  const double s = std::sinh(mu);
  const double u = 1.0 - c + root * s;
  const double q = root * c - s;
  if (std::holds_alternative<Hard>(regime)) return {u, 2.0 * q};
  return {u, q};
}

double coupled_system_check(const Regime& regime, double xi, std::span<const double> s_grid,
                            const Settings& settings, double h) {
  if (!(xi >= 0.0 && xi <= 1.0)) throw DomainError("coupled_system_check: xi must lie in [0, 1]");
  if (xi == 0.0) return 0.0;
  const auto* hard = std::get_if<Hard>(&regime);
  double worst = 0.0;
  for (double s : s_grid) {
    if (hard && !(s - 2.0 * h > 0.0)) throw DomainError("coupled_system_check: stencil leaves (0, inf)");
    const double mu0 = mu_at(regime, s, xi, settings);
    auto state_at = [&](double t) {
      return coupled_state(regime, mu0 + mu_shift(regime, s, t - s, xi, settings), xi);
    };
    const auto du = stencil([&](double t) { return state_at(t).u_eps; }, s, h);
    const auto dq = stencil([&](double t) { return state_at(t).q_eps; }, s, h);
    const auto here = coupled_state(regime, mu0, xi);
    const double q = q_at(regime, s, xi, settings);
    double e1, e2;
    if (hard) {
      const double rs = std::sqrt(s);
      e1 = rs * du.first - 0.25 * q * here.q_eps;
      e2 = rs * dq.first + q * (1.0 - here.u_eps);
    } else {
      e1 = du.first + q * here.q_eps;
      e2 = dq.first - q * (1.0 - here.u_eps);
    }
    worst = std::max({worst, std::abs(e1), std::abs(e2)});
  }
  return worst;
}

}  // namespace edgegap::transcendents
