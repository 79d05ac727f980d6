// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <string>

#include "edgegap/error.hpp"
#include "edgegap/fredholm.hpp"
#include "edgegap/specfun.hpp"

namespace edgegap::fredholm {

using specfun::airy_ai;
using specfun::airy_ai_prime;
using specfun::bessel_j;
using specfun::bessel_j_prime;

const char* to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::KSoft: return "KSoft";
    case KernelKind::KHard: return "KHard";
    case KernelKind::VSoft: return "VSoft";
    case KernelKind::VHard: return "VHard";
  }
  return "?";
}

namespace {

void check_order(double a) {
  if (!(a > -1.0)) throw DomainError("Bessel kernel order must exceed -1");
}

void check_hard_s(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("hard-edge interval (0, s) needs s > 0");
}

double soft_diagonal(double x) {
  const double ai = airy_ai(x);
  const double aip = airy_ai_prime(x);
  return aip * aip - x * ai * ai;
}

// (1/4) (J_a'(z)^2 + (1 - a^2/z^2) J_a(z)^2), z = sqrt(x)
double hard_diagonal(double a, double x) {
  const double z = std::sqrt(x);
  const double j = bessel_j(a, z);
  const double jp = bessel_j_prime(a, z);
  return 0.25 * (jp * jp + (1.0 - a * a / x) * j * j);
}

}  // namespace

KernelOperator k_soft(double s, double truncation_base) {
  if (!std::isfinite(s)) throw DomainError("k_soft: non-finite s");
  return {KernelKind::KSoft, s, 0.0, quad::SemiInfinite{s, quad::soft_truncation(s, truncation_base)}};
}

KernelOperator k_hard(double s, double a) {
  check_hard_s(s);
  check_order(a);
  return {KernelKind::KHard, s, a, quad::SquareRoot{0.0, s}};
}

KernelOperator v_soft(double s, double truncation_base) {
  if (!std::isfinite(s)) throw DomainError("v_soft: non-finite s");
  return {KernelKind::VSoft, s, 0.0, quad::SemiInfinite{0.0, quad::soft_truncation(s, truncation_base)}};
}

KernelOperator v_hard(double s, double a) {
  check_hard_s(s);
  check_order(a);
  return {KernelKind::VHard, s, a, quad::SquareRoot{0.0, 1.0}};
}

quad::QuadratureRule discretize(const KernelOperator& op, int m) {
  return quad::map_rule(quad::cached_gauss_legendre(m), op.domain);
}

double kernel_eval(const KernelOperator& op, double x, double y) {
  const double lo = quad::domain_lo(op.domain);
  const double hi = quad::domain_hi(op.domain);
  if (x < lo || x > hi || y < lo || y > hi) {
    throw DomainError(std::string("kernel_eval: point outside the domain of ") + to_string(op.kind));
  }
  switch (op.kind) {
    case KernelKind::KSoft: {
      if (std::abs(x - y) < kDiagonalGap) return soft_diagonal(0.5 * (x + y));
      return (airy_ai(x) * airy_ai_prime(y) - airy_ai(y) * airy_ai_prime(x)) / (x - y);
    }
    case KernelKind::KHard: {
      if (std::abs(x - y) < kDiagonalGap) return hard_diagonal(op.a, 0.5 * (x + y));
      const double zx = std::sqrt(x);
      const double zy = std::sqrt(y);
      const double fx = bessel_j(op.a, zx);
      const double fy = bessel_j(op.a, zy);
      const double gx = zx * bessel_j_prime(op.a, zx);
      const double gy = zy * bessel_j_prime(op.a, zy);
      return (fx * gy - gx * fy) / (2.0 * (x - y));
    }
    case KernelKind::VSoft:
      return airy_ai(x + y + op.s);
    case KernelKind::VHard:
      return 0.5 * std::sqrt(op.s) * bessel_j(op.a, std::sqrt(op.s * x * y));
  }
  throw DomainError("kernel_eval: unknown kernel");
}

}  // namespace edgegap::fredholm
