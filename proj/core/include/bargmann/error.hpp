// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

#pragma once

#include <stdexcept>
#include <string>

namespace bargmann {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument: even grid length, bad order, wrong field kind, ...
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A method's sampling-grid constraint is violated. The message names the
/// spacing that would have been accepted.
class GridConstraintError : public Error {
 public:
  using Error::Error;
};

/// Overflow, underflow or rank deficiency detected during evaluation.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a signal, field or table failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace bargmann
