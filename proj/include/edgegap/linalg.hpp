// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "edgegap/simd.hpp"

namespace edgegap::linalg {

/// Dense row-major square matrix.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double* row(std::size_t i) { return data_.data() + i * n_; }
  const double* row(std::size_t i) const { return data_.data() + i * n_; }

  static Matrix identity(std::size_t n);

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// max |A - A^T|
double asymmetry(const Matrix& a);

/// LU factorization with partial pivoting, PA = LU, computed in place.
class LuFactorization {
 public:
  explicit LuFactorization(Matrix a, const simd::KernelTable& kernels = simd::active_kernels());

  double determinant() const;

  /// Smallest |U_kk|; a proxy for the distance to singularity.
  double min_abs_pivot() const { return min_pivot_; }

  /// Solves A x = b, overwriting b with x.
  void solve_in_place(std::span<double> b) const;

 private:
  Matrix lu_;
  std::vector<std::size_t> perm_;
  int sign_ = 1;
  double min_pivot_ = 0.0;
  const simd::KernelTable* kernels_;
};

}  // namespace edgegap::linalg
