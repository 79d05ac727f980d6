// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <vector>

#include "edgegap/linalg.hpp"
#include "edgegap/quad.hpp"

namespace edgegap::fredholm {

enum class KernelKind {
  KSoft,  // Airy kernel on (s, inf)
  KHard,  // Bessel kernel of order a on (0, s)
  VSoft,  // Ai(x + u + s) on (0, inf)
  VHard,  // sqrt(s)/2 J_a(sqrt(s x y)) on (0, 1)
};

const char* to_string(KernelKind kind);

struct KernelOperator {
  KernelKind kind;
  double s = 0.0;
  double a = 0.0;
  quad::Domain domain;
};

// Operator factories. Semi-infinite domains are truncated as in
// quad::soft_truncation; Bessel-kernel domains use the square-root map.
KernelOperator k_soft(double s, double truncation_base = quad::kDefaultTruncation);
KernelOperator k_hard(double s, double a);
KernelOperator v_soft(double s, double truncation_base = quad::kDefaultTruncation);
KernelOperator v_hard(double s, double a);

/// Reference Gauss-Legendre rule of order m mapped onto op.domain.
quad::QuadratureRule discretize(const KernelOperator& op, int m = quad::kDefaultOrder);

/// Kernel value k(x, y). Difference-quotient kernels switch to the closed-form
/// diagonal (evaluated at the midpoint) when |x - y| < kDiagonalGap.
double kernel_eval(const KernelOperator& op, double x, double y);

constexpr double kDiagonalGap = 1e-5;

/// D_ij = sqrt(w_i) k(x_i, x_j) sqrt(w_j). Throws DomainError if the rule is
/// not mapped onto op.domain.
linalg::Matrix nystrom_matrix(const KernelOperator& op, const quad::QuadratureRule& rule,
                              const simd::KernelTable& kernels = simd::active_kernels());

/// det(I - xi K) by the Nystrom method; xi in [-2, 2].
double fredholm_det(const KernelOperator& op, double xi, const quad::QuadratureRule& rule);

/// Factored (I - xi D) on the nodes of a rule, reused for determinants,
/// solves and endpoint interpolation.
class Resolvent {
 public:
  Resolvent(const KernelOperator& op, double xi, const quad::QuadratureRule& rule);

  double determinant() const { return lu_.determinant(); }
  double min_abs_pivot() const { return lu_.min_abs_pivot(); }
  const quad::QuadratureRule& rule() const { return rule_; }
  const KernelOperator& op() const { return op_; }
  double xi() const { return xi_; }

  /// [(I - xi K)^{-1} phi](x_i) at every node. Throws NumericalError when the
  /// smallest pivot is below kSingularPivot.
  std::vector<double> solve(std::span<const double> phi_at_nodes) const;

  /// Nystrom interpolation phi(x) + xi sum_j k(x, x_j) w_j f_j with f the
  /// solution at the nodes.
  double interpolate(double x, double phi_at_x, std::span<const double> solution) const;

 private:
  KernelOperator op_;
  double xi_;
  quad::QuadratureRule rule_;
  std::vector<double> sqrt_w_;
  linalg::LuFactorization lu_;
};

constexpr double kSingularPivot = 1e-12;

/// Rank-one perturbation A (x) B of a kernel: (A (x) B) f = A(x) int B(y) f(y) dy.
struct RankOneAugmentation {
  std::function<double(double)> multiplier;  // A
  std::function<double(double)> row;         // B
};

/// A = Ai, B(y) = int_0^inf Ai(y - v) dv.
RankOneAugmentation soft_augmentation();
/// A = J_a(sqrt x), B(y) = (2 sqrt y)^{-1} int_{sqrt y}^inf J_a(t) dt.
RankOneAugmentation hard_augmentation(double a);

/// det(I - xi (K + A (x) B)) = det(I - xi K) (1 - xi <(I - xi K)^{-1} A, B>).
double fredholm_det_rank_one(const KernelOperator& op, const RankOneAugmentation& aug, double xi,
                             const quad::QuadratureRule& rule);

/// [(I - xi K)^{-1} phi](endpoint) by Nystrom interpolation.
double resolvent_at_endpoint(const KernelOperator& op, const std::function<double(double)>& phi,
                             double xi, const quad::QuadratureRule& rule, double endpoint);

// Tail integrals behind the rank-one rows.

/// int_{-inf}^{y} Ai(u) du for each y (any order).
std::vector<double> airy_cumulative(std::span<const double> ys);
/// int_0^{t} J_a(u) du for each t >= 0 (any order).
std::vector<double> bessel_cumulative(double a, std::span<const double> ts);

}  // namespace edgegap::fredholm
