// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace edgegap::quad {

/// The reference interval (-1, 1) of an unmapped rule.
struct Reference {};

/// Affine image (lo, hi).
struct Finite {
  double lo;
  double hi;
};

/// (lo, infinity), truncated to (lo, lo + truncation).
struct SemiInfinite {
  double lo;
  double truncation;
};

/// (lo, hi) reached through x = lo + (hi - lo) u^2, u in (0, 1). Clusters nodes
/// at lo and turns x^{-1/2} and x^{a/2} endpoint behavior into smooth
/// integrands in u.
struct SquareRoot {
  double lo;
  double hi;
};

using Domain = std::variant<Reference, Finite, SemiInfinite, SquareRoot>;

bool same_domain(const Domain& a, const Domain& b);

/// Lower and upper end of the (truncated) integration range.
double domain_lo(const Domain& d);
double domain_hi(const Domain& d);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  Domain mapping = Reference{};

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

constexpr int kMinOrder = 2;
constexpr int kMaxOrder = 512;
constexpr int kDefaultOrder = 80;
constexpr double kDefaultTruncation = 25.0;

/// Gauss-Legendre nodes and weights on (-1, 1); 2 <= m <= 512.
QuadratureRule gauss_legendre(int m);

/// Same as gauss_legendre but memoized; the returned reference stays valid.
const QuadratureRule& cached_gauss_legendre(int m);

/// Maps a reference rule onto `domain`. Throws DomainError for degenerate
/// domains or an already-mapped rule.
QuadratureRule map_rule(const QuadratureRule& rule, const Domain& domain);

/// Truncation length used for (s, infinity): max(base, 12 - s).
double soft_truncation(double s, double base = kDefaultTruncation);

/// Composite Gauss-Legendre integral of f over (lo, hi) with panels no longer
/// than `panel` and `per_panel` points each.
template <class F>
double composite_integral(F&& f, double lo, double hi, double panel = 2.0, int per_panel = 24) {
  if (hi == lo) return 0.0;
  const double len = hi - lo;
  int panels = static_cast<int>(std::abs(len) / panel) + 1;
  const auto& ref = cached_gauss_legendre(per_panel);
  const double h = len / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * h;
    const double mid = a + 0.5 * h;
    double part = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      part += ref.weights[i] * f(mid + 0.5 * h * ref.nodes[i]);
    }
    sum += 0.5 * h * part;
  }
  return sum;
}

}  // namespace edgegap::quad
