#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mero {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression or function-file text.
class ParseError : public Error {
 public:
  enum class Kind { syntax, non_integer_exponent, exponent_range };

  ParseError(Kind kind, std::size_t offset, std::vector<std::string> expected, const std::string& message)
      : Error(message + " at offset " + std::to_string(offset)),
        kind_(kind),
        offset_(offset),
        expected_(std::move(expected)) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  Kind kind_;
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Function file with a bad directive (line-oriented, reported with the line number).
class FileFormatError : public Error {
 public:
  FileFormatError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Expression evaluation failure.
class EvalError : public Error {
 public:
  enum class Kind { pole_hit, non_finite };
  EvalError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Input that is well formed but mathematically ill posed for the analysis
/// (pole on the boundary, zero denominator, spurious pole, zero function, ...).
class IllPosedError : public Error {
 public:
  using Error::Error;
};

/// Contour quadrature failed to converge within the node budget.
class QuadratureError : public IllPosedError {
 public:
  using IllPosedError::IllPosedError;
};

/// |g| overflowed on the boundary grid.
class BoundaryOverflowError : public Error {
 public:
  BoundaryOverflowError(double theta, const std::string& message)
      : Error(message + " (theta = " + std::to_string(theta) + ")"), theta_(theta) {}
  double theta() const noexcept { return theta_; }

 private:
  double theta_;
};

/// Operands that do not fit together (different disks, smooth input to the
/// witness builder, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace mero
