// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <string>
#include <utility>

#include "edgegap/error.hpp"
#include "edgegap/fredholm.hpp"
#include "edgegap/specfun.hpp"

namespace edgegap::fredholm {
namespace {

void check_rule(const KernelOperator& op, const quad::QuadratureRule& rule) {
  if (!quad::same_domain(op.domain, rule.mapping)) {
    throw DomainError(std::string("quadrature rule is not mapped onto the domain of ") +
                      to_string(op.kind));
  }
}

void check_xi(double xi) {
  if (!(xi >= -2.0 && xi <= 2.0)) throw DomainError("xi must lie in [-2, 2]");
}

std::vector<double> sqrt_weights(const quad::QuadratureRule& rule) {
  std::vector<double> sw(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) sw[i] = std::sqrt(rule.weights[i]);
  return sw;
}

// Rows of a difference-quotient kernel scale * (f(x)g(y) - g(x)f(y)) / (x - y)
// through the vector kernel, then the near-diagonal entries from `diag`.
template <class Diagonal>
void fill_quotient(linalg::Matrix& d, const quad::QuadratureRule& rule, std::span<const double> sw,
                   std::span<const double> f, std::span<const double> g, double scale,
                   Diagonal&& diag, const simd::KernelTable& kernels) {
  const std::size_t n = rule.size();
  const double* x = rule.nodes.data();
  for (std::size_t i = 0; i < n; ++i) {
    kernels.quotient_row(f[i], g[i], x[i], scale * sw[i], f.data(), g.data(), x, sw.data(),
                         d.row(i), n);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (std::abs(x[i] - x[j]) < kDiagonalGap) {
        d(i, j) = sw[i] * sw[j] * diag(0.5 * (x[i] + x[j]));
      } else {
        // Exact symmetry; the vector kernel may round the two triangles differently.
        d(i, j) = 0.5 * (d(i, j) + d(j, i));
      }
      d(j, i) = d(i, j);
    }
  }
}

}  // namespace

linalg::Matrix nystrom_matrix(const KernelOperator& op, const quad::QuadratureRule& rule,
                              const simd::KernelTable& kernels) {
  check_rule(op, rule);
  const std::size_t n = rule.size();
  const auto sw = sqrt_weights(rule);
  linalg::Matrix d(n);
  switch (op.kind) {
    case KernelKind::KSoft: {
      std::vector<double> f(n), g(n);
      for (std::size_t i = 0; i < n; ++i) {
        f[i] = specfun::airy_ai(rule.nodes[i]);
        g[i] = specfun::airy_ai_prime(rule.nodes[i]);
      }
      fill_quotient(d, rule, sw, f, g, 1.0,
                    [&](double x) { return kernel_eval(op, x, x); }, kernels);
      break;
    }
    case KernelKind::KHard: {
      std::vector<double> f(n), g(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double z = std::sqrt(rule.nodes[i]);
        f[i] = specfun::bessel_j(op.a, z);
        g[i] = z * specfun::bessel_j_prime(op.a, z);
      }
      fill_quotient(d, rule, sw, f, g, 0.5,
                    [&](double x) { return kernel_eval(op, x, x); }, kernels);
      break;
    }
    case KernelKind::VSoft:
    case KernelKind::VHard: {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          d(i, j) = sw[i] * sw[j] * kernel_eval(op, rule.nodes[i], rule.nodes[j]);
          d(j, i) = d(i, j);
        }
      }
      break;
    }
  }
  return d;
}

namespace {

linalg::Matrix identity_minus(linalg::Matrix d, double xi) {
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    double* r = d.row(i);
    for (std::size_t j = 0; j < n; ++j) r[j] = -xi * r[j];
    r[i] += 1.0;
  }
  return d;
}

}  // namespace

double fredholm_det(const KernelOperator& op, double xi, const quad::QuadratureRule& rule) {
  check_xi(xi);
  check_rule(op, rule);
  if (xi == 0.0) return 1.0;
  return linalg::LuFactorization(identity_minus(nystrom_matrix(op, rule), xi)).determinant();
}

Resolvent::Resolvent(const KernelOperator& op, double xi, const quad::QuadratureRule& rule)
    : op_(op),
      xi_(xi),
      rule_((check_xi(xi), check_rule(op, rule), rule)),
      sqrt_w_(sqrt_weights(rule)),
      lu_(identity_minus(nystrom_matrix(op, rule), xi)) {}

std::vector<double> Resolvent::solve(std::span<const double> phi_at_nodes) const {
  if (phi_at_nodes.size() != rule_.size()) throw DomainError("Resolvent::solve: size mismatch");
  if (lu_.min_abs_pivot() < kSingularPivot) {
    throw NumericalError("I - xi K is numerically singular (pivot " +
                         std::to_string(lu_.min_abs_pivot()) + "); xi beyond admissible range");
  }
  std::vector<double> z(rule_.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = sqrt_w_[i] * phi_at_nodes[i];
  lu_.solve_in_place(z);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] /= sqrt_w_[i];
  return z;
}

double Resolvent::interpolate(double x, double phi_at_x, std::span<const double> solution) const {
  double sum = 0.0;
  for (std::size_t j = 0; j < rule_.size(); ++j) {
    sum += kernel_eval(op_, x, rule_.nodes[j]) * rule_.weights[j] * solution[j];
  }
  return phi_at_x + xi_ * sum;
}

double fredholm_det_rank_one(const KernelOperator& op, const RankOneAugmentation& aug, double xi,
                             const quad::QuadratureRule& rule) {
  if (op.kind != KernelKind::KSoft && op.kind != KernelKind::KHard) {
    throw DomainError("fredholm_det_rank_one: needs KSoft or KHard");
  }
  check_xi(xi);
  check_rule(op, rule);
  if (xi == 0.0) return 1.0;
  const Resolvent r(op, xi, rule);
  std::vector<double> a(rule.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = aug.multiplier(rule.nodes[i]);
  const auto f = r.solve(a);
  double inner = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) inner += rule.weights[i] * f[i] * aug.row(rule.nodes[i]);
  return r.determinant() * (1.0 - xi * inner);
}

double resolvent_at_endpoint(const KernelOperator& op, const std::function<double(double)>& phi,
                             double xi, const quad::QuadratureRule& rule, double endpoint) {
  if (op.kind != KernelKind::KSoft && op.kind != KernelKind::KHard) {
    throw DomainError("resolvent_at_endpoint: needs KSoft or KHard");
  }
  check_xi(xi);
  check_rule(op, rule);
  if (xi == 0.0) return phi(endpoint);
  const Resolvent r(op, xi, rule);
  std::vector<double> p(rule.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = phi(rule.nodes[i]);
  return r.interpolate(endpoint, phi(endpoint), r.solve(p));
}

}  // namespace edgegap::fredholm
