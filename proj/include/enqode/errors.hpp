// enqode: error types shared by all modules
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace enqode {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Qubit count or register size out of the supported range.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Mismatched qubit counts or dimensions between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument that is not tied to an encoding domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Data set outside the domain of an encoding.
class EncodingDomainError : public Error {
 public:
  using Error::Error;
};

/// State not representable in the requested encoding.
class DecodeError : public Error {
 public:
  using Error::Error;
};

/// Register marginal is not concentrated on a single outcome.
class NotDeterministicError : public Error {
 public:
  using Error::Error;
};

/// Function table not compatible with the index mapping of a distribution.
class CompatibilityError : public Error {
 public:
  using Error::Error;
};

/// Circuit or state would exceed the simulator limits.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in pipeline text, with 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace enqode
