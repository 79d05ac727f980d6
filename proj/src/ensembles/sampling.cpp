// SPDX-License-Identifier: Apache-2.0
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "edgegap/ensembles.hpp"
#include "edgegap/error.hpp"

namespace edgegap::ensembles {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

EnsembleSpec EnsembleSpec::gaussian(int beta, int n) {
  EnsembleSpec spec{Gaussian{}, beta, n};
  spec.validate();
  return spec;
}

EnsembleSpec EnsembleSpec::laguerre_for_order(int beta, int n, double a) {
  double w = a;
  if (beta == 1) w = (a - 1.0) / 2.0;
  if (beta == 4) w = a + 1.0;
  EnsembleSpec spec{Laguerre{w}, beta, n};
  spec.validate();
  return spec;
}

void EnsembleSpec::validate() const {
  if (beta != 1 && beta != 2 && beta != 4) throw DomainError("ensemble beta must be 1, 2 or 4");
  if (n < 1) throw DomainError("ensemble size must be >= 1");
  if (const auto* l = std::get_if<Laguerre>(&family); l && !(l->exponent > -1.0)) {
    throw DomainError("Laguerre weight exponent must exceed -1");
  }
}

Ordering ordering_for(const Family& family) {
  return std::holds_alternative<Gaussian>(family) ? Ordering::Descending : Ordering::Ascending;
}

namespace {

double chi(std::mt19937_64& rng, double dof) {
  std::gamma_distribution<double> g(0.5 * dof, 2.0);
  return std::sqrt(g(rng));
}

void sort_for(std::vector<double>& v, Ordering ordering) {
  if (ordering == Ordering::Descending) {
    std::sort(v.begin(), v.end(), std::greater<>());
  } else {
    std::sort(v.begin(), v.end());
  }
}

std::vector<double> tridiagonal_eigenvalues(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub) {
  if (diag.size() == 1) return {diag[0]};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// Both models are drawn in the "raw" normalization with weight e^{-beta x^2/2}
// (Gaussian) or x^w e^{-beta x/2} (Laguerre), then rescaled: beta = 4 needs
// x -> sqrt(2) x (Gaussian) or x -> 2 x (Laguerre); beta = 1, 2 already match.
std::vector<double> draw(const EnsembleSpec& spec, std::mt19937_64& rng) {
  const int n = spec.n;
  const double beta = spec.beta;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  std::vector<double> ev;
  if (spec.is_gaussian()) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const double scale = 1.0 / std::sqrt(beta);
    for (int i = 0; i < n; ++i) diag[i] = scale * normal(rng);
    for (int i = 0; i + 1 < n; ++i) sub[i] = chi(rng, beta * (n - 1 - i)) * scale / std::sqrt(2.0);
    ev = tridiagonal_eigenvalues(diag, sub);
    if (spec.beta == 4) {
      for (auto& x : ev) x *= std::sqrt(2.0);
    }
  } else {
    const double w = std::get<Laguerre>(spec.family).exponent;
    // Lower bidiagonal B with diag chi_{2c - beta i}, subdiag chi_{beta (n-1-i)},
    // c = w + 1 + beta (n - 1) / 2; eigenvalues of B B^T / beta.
    const double c = w + 1.0 + beta * (n - 1) / 2.0;
    std::vector<double> d(n), e(std::max(n - 1, 0));
    for (int i = 0; i < n; ++i) {
      d[i] = chi(rng, 2.0 * c - beta * i);
      if (i + 1 < n) e[i] = chi(rng, beta * (n - 1 - i));
    }
    for (int i = 0; i < n; ++i) {
      diag[i] = (d[i] * d[i] + (i > 0 ? e[i - 1] * e[i - 1] : 0.0)) / beta;
      if (i + 1 < n) sub[i] = e[i] * d[i] / beta;
    }
    ev = tridiagonal_eigenvalues(diag, sub);
    for (auto& x : ev) x = std::max(x, 0.0);
    if (spec.beta == 4) {
      for (auto& x : ev) x *= 2.0;
    }
  }
  return ev;
}

}  // namespace

EnsembleSample sample(const EnsembleSpec& spec, std::uint64_t seed) {
  spec.validate();
  std::mt19937_64 rng(seed);
  auto ev = draw(spec, rng);
  const auto ordering = ordering_for(spec.family);
  sort_for(ev, ordering);
  return {std::move(ev), ordering, spec, seed};
}

Sampler::Sampler(EnsembleSpec spec, std::uint64_t seed) : spec_(spec), seed_(seed), engine_(seed) {
  spec_.validate();
}

EnsembleSample Sampler::next() {
  auto ev = draw(spec_, engine_);
  const auto ordering = ordering_for(spec_.family);
  sort_for(ev, ordering);
  return {std::move(ev), ordering, spec_, seed_};
}

namespace {

EnsembleSample even_labelled(std::vector<double> merged, Ordering ordering, EnsembleSpec spec,
                             std::uint64_t seed) {
  sort_for(merged, ordering);
  std::vector<double> even;
  for (std::size_t i = 1; i < merged.size(); i += 2) even.push_back(merged[i]);
  spec.n = static_cast<int>(even.size());
  return {std::move(even), ordering, spec, seed};
}

}  // namespace

EnsembleSample superpose_even(const EnsembleSample& first, const EnsembleSample& second) {
  if (first.spec.beta != 1 || second.spec.beta != 1) {
    throw DomainError("superpose_even: both samples must be beta = 1");
  }
  if (first.spec.family.index() != second.spec.family.index() || first.ordering != second.ordering) {
    throw DomainError("superpose_even: incompatible families");
  }
  const auto* l1 = std::get_if<Laguerre>(&first.spec.family);
  const auto* l2 = std::get_if<Laguerre>(&second.spec.family);
  if (l1 && l2 && l1->exponent != l2->exponent) throw DomainError("superpose_even: weight exponents differ");
  const auto n1 = first.eigenvalues.size();
  const auto n2 = second.eigenvalues.size();
  if (std::max(n1, n2) != std::min(n1, n2) + 1) {
    throw DomainError("superpose_even: sizes must be N and N + 1");
  }
  std::vector<double> merged(first.eigenvalues);
  merged.insert(merged.end(), second.eigenvalues.begin(), second.eigenvalues.end());
  // OE(x^w) (+) OE(x^w) -> UE(x^{2w+1}).
  auto spec = first.spec;
  spec.beta = 2;
  if (l1) spec.family = Laguerre{2.0 * l1->exponent + 1.0};
  return even_labelled(std::move(merged), first.ordering, spec, first.seed);
}

EnsembleSample decimate_even(const EnsembleSample& s) {
  if (s.spec.beta != 1) throw DomainError("decimate_even: needs a beta = 1 sample");
  if (s.eigenvalues.size() % 2 == 0) throw DomainError("decimate_even: needs an odd-sized sample");
  // OE_{2N+1}(x^w) -> SE_N(x^{2w+2}).
  auto spec = s.spec;
  spec.beta = 4;
  if (const auto* l = std::get_if<Laguerre>(&s.spec.family)) spec.family = Laguerre{2.0 * l->exponent + 2.0};
  return even_labelled(s.eigenvalues, s.ordering, spec, s.seed);
}

}  // namespace edgegap::ensembles
