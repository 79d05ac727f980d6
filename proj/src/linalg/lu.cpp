// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "edgegap/error.hpp"
#include "edgegap/linalg.hpp"

namespace edgegap::linalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double asymmetry(const Matrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      worst = std::max(worst, std::abs(a(i, j) - a(j, i)));
    }
  }
  return worst;
}

LuFactorization::LuFactorization(Matrix a, const simd::KernelTable& kernels)
    : lu_(std::move(a)), perm_(lu_.size()), kernels_(&kernels) {
  const std::size_t n = lu_.size();
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
  min_pivot_ = n == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu_(i, k)) > best) {
        best = std::abs(lu_(i, k));
        p = i;
      }
    }
    if (p != k) {
      std::swap_ranges(lu_.row(k), lu_.row(k) + n, lu_.row(p));
      std::swap(perm_[k], perm_[p]);
      sign_ = -sign_;
    }
    min_pivot_ = std::min(min_pivot_, best);
    const double pivot = lu_(k, k);
    if (pivot == 0.0) continue;
    const std::size_t tail = n - k - 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double l = lu_(i, k) / pivot;
      lu_(i, k) = l;
      if (l != 0.0) kernels_->axpy(-l, lu_.row(k) + k + 1, lu_.row(i) + k + 1, tail);
    }
  }
}

double LuFactorization::determinant() const {
  double det = sign_;
  for (std::size_t k = 0; k < lu_.size(); ++k) det *= lu_(k, k);
  return det;
}

void LuFactorization::solve_in_place(std::span<double> b) const {
  const std::size_t n = lu_.size();
  if (b.size() != n) throw DomainError("LuFactorization::solve_in_place: size mismatch");
  if (min_pivot_ == 0.0) throw NumericalError("LuFactorization: singular matrix");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = b[perm_[i]];
  for (std::size_t i = 0; i < n; ++i) {
    y[i] -= kernels_->dot(lu_.row(i), y.data(), i);
  }
  for (std::size_t ii = n; ii-- > 0;) {
    const double s = kernels_->dot(lu_.row(ii) + ii + 1, y.data() + ii + 1, n - ii - 1);
    y[ii] = (y[ii] - s) / lu_(ii, ii);
  }
  std::copy(y.begin(), y.end(), b.begin());
}

}  // namespace edgegap::linalg
