// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace dysonsim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold (non-Hermitian input, an
/// out-of-domain tolerance, mismatched dimensions, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A dense or state-vector allocation would exceed the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, int required, int available)
      : Error(what), required_(required), available_(available) {}

  int required() const noexcept { return required_; }
  int available() const noexcept { return available_; }

 private:
  int required_;
  int available_;
};

/// An iterative procedure failed to reach its target accuracy.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_delta)
      : Error(what), last_delta_(last_delta) {}

  double last_delta() const noexcept { return last_delta_; }

 private:
  double last_delta_;
};

}  // namespace dysonsim
