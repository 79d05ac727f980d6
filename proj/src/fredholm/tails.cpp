// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <numeric>

#include "edgegap/error.hpp"
#include "edgegap/fredholm.hpp"
#include "edgegap/specfun.hpp"

namespace edgegap::fredholm {
namespace {

// Cumulative integral of f from `origin` to each point, visiting the points in
// sorted order so each stretch between neighbors is integrated once.
template <class F>
std::vector<double> cumulative(F&& f, double origin, std::span<const double> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return points[i] < points[j]; });
  std::vector<double> out(points.size());
  // walk upwards from the origin and downwards from the origin separately
  auto split = std::partition_point(order.begin(), order.end(),
                                    [&](auto i) { return points[i] < origin; });
  double at = origin;
  double acc = 0.0;
  for (auto it = split; it != order.end(); ++it) {
    acc += quad::composite_integral(f, at, points[*it]);
    at = points[*it];
    out[*it] = acc;
  }
  at = origin;
  acc = 0.0;
  for (auto it = split; it != order.begin();) {
    --it;
    acc += quad::composite_integral(f, at, points[*it]);
    at = points[*it];
    out[*it] = acc;
  }
  return out;
}

}  // namespace

std::vector<double> airy_cumulative(std::span<const double> ys) {
  // int_{-inf}^0 Ai = 2/3
  auto partial = cumulative([](double u) { return specfun::airy_ai(u); }, 0.0, ys);
  for (auto& v : partial) v += 2.0 / 3.0;
  return partial;
}

std::vector<double> bessel_cumulative(double a, std::span<const double> ts) {
  for (double t : ts) {
    if (!(t >= 0.0)) throw DomainError("bessel_cumulative: negative upper limit");
  }
  if (a >= 0.0) {
    return cumulative([a](double u) { return specfun::bessel_j(a, u); }, 0.0, ts);
  }
  // Integrable u^a singularity at the origin: substitute u = v^{1/(1+a)}, so
  // int_0^t J_a(u) du = (1/(1+a)) int_0^{t^{1+a}} J_a(u) u^{-a} dv.
  const double p = 1.0 + a;
  std::vector<double> vs(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) vs[i] = std::pow(ts[i], p);
  auto out = cumulative(
      [a, p](double v) {
        if (v <= 0.0) return 0.0;
        const double u = std::pow(v, 1.0 / p);
        return specfun::bessel_j(a, u) * std::pow(u, -a) / p;
      },
      0.0, vs);
  return out;
}

RankOneAugmentation soft_augmentation() {
  return {
      [](double x) { return specfun::airy_ai(x); },
      [](double y) {
        const double pt[1] = {y};
        return airy_cumulative(pt)[0];
      },
  };
}

RankOneAugmentation hard_augmentation(double a) {
  if (!(a > -1.0)) throw DomainError("hard_augmentation: order must exceed -1");
  return {
      [a](double x) { return specfun::bessel_j(a, std::sqrt(x)); },
      [a](double y) {
        // int_0^inf J_a = 1 for a > -1
        const double t[1] = {std::sqrt(y)};
        return (1.0 - bessel_cumulative(a, t)[0]) / (2.0 * std::sqrt(y));
      },
  };
}

}  // namespace edgegap::fredholm
