// Copyright 2026 The qaffine Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QAFFINE_ERRORS_H_
#define QAFFINE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace qaffine {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different value groups.
class ValueGroupMismatch : public Error {
 public:
  using Error::Error;
};

// A caller-supplied argument violates a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Text input could not be parsed. Line and column are 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(format(message, line, column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    if (line <= 0) {
      return column > 0 ? "column " + std::to_string(column) + ": " + message
                        : message;
    }
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

// A parameter matrix fails q_ii = 1 or q_ij q_ji = 1.
class MatrixValidationError : public Error {
 public:
  enum class Kind { kDiagonalNotOne, kNotInversePair };

  MatrixValidationError(Kind kind, int i, int j, const std::string& message)
      : Error(message), kind_(kind), i_(i), j_(j) {}

  Kind kind() const { return kind_; }
  // 0-based offending position.
  int row() const { return i_; }
  int col() const { return j_; }

 private:
  Kind kind_;
  int i_;
  int j_;
};

// A computation would exceed a fixed enumeration cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Values of a parameter matrix cannot be placed in the requested field.
class EmbeddingError : public Error {
 public:
  using Error::Error;
};

// A field matrix is not a graded automorphism of the given algebra.
class NotAnAutomorphism : public Error {
 public:
  using Error::Error;
};

// A search ran out of its node budget before reaching a verdict.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qaffine

#endif  // QAFFINE_ERRORS_H_
