// Copyright 2026 The hundq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hundq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A size limit was exceeded (mode count, dense cap, decomposition cap).
class CapacityError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public CapacityError {
 public:
  using CapacityError::CapacityError;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Bad or incomplete user input that is not a syntax problem (e.g. grid gaps).
class InputError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_ritz)
      : Error(what), best_ritz_(best_ritz) {}
  double best_ritz() const noexcept { return best_ritz_; }

 private:
  double best_ritz_;
};

}  // namespace hundq
