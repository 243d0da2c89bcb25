#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latreg {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (bad model spec, empty report, ...).
class PreconditionViolation : public Error {
public:
  using Error::Error;
};

/// Problems with the measurements themselves.
class DataError : public Error {
public:
  using Error::Error;
};

class ColumnNotFound : public DataError {
public:
  explicit ColumnNotFound(std::string column)
      : DataError("column not found: '" + column + "'"), column_(std::move(column)) {}

  const std::string& column() const noexcept { return column_; }

private:
  std::string column_;
};

class EmptyData : public DataError {
public:
  EmptyData() : DataError("dataset has no rows") {}
  using DataError::DataError;
};

class MissingVertex : public DataError {
public:
  using DataError::DataError;
};

/// The weights of a mean sum to (numerically) zero.
class ZeroWeight : public DataError {
public:
  ZeroWeight(std::string what, double weight_sum)
      : DataError(std::move(what)), weight_sum_(weight_sum) {}

  double weight_sum() const noexcept { return weight_sum_; }

private:
  double weight_sum_;
};

/// CSV ingestion failure. Row is the 1-based data row (0 for the header).
class CsvError : public DataError {
public:
  CsvError(const std::string& what, std::size_t row, std::string column)
      : DataError(what), row_(row), column_(std::move(column)) {}

  std::size_t row() const noexcept { return row_; }
  const std::string& column() const noexcept { return column_; }

private:
  std::size_t row_;
  std::string column_;
};

/// The normal equations have no unique solution.
class SingularSystem : public Error {
public:
  SingularSystem(const std::string& what, double determinant)
      : Error(what), determinant_(determinant) {}

  double determinant() const noexcept { return determinant_; }

private:
  double determinant_;
};

/// Model expression could not be parsed. Position is a 0-based offset into the input.
class ModelParseError : public Error {
public:
  ModelParseError(std::string message, std::string input, std::size_t position)
      : Error(format(message, input, position)),
        message_(std::move(message)),
        input_(std::move(input)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }
  const std::string& input() const noexcept { return input_; }

private:
  static std::string format(const std::string& message, const std::string& input,
                            std::size_t position) {
    return message + " at position " + std::to_string(position) + "\n  " + input + "\n  " +
           std::string(position, ' ') + "^";
  }

  std::string message_;
  std::string input_;
  std::size_t position_;
};

}  // namespace latreg
