// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace edgegap {

/// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A discretized operator turned out (numerically) singular.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace edgegap
