#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latreg/direction.hpp"
#include "latreg/errors.hpp"

namespace latreg {

/// Named numeric columns of equal length, kept in insertion order.
/// Immutable once built: every column has n >= 1 finite values.
class Dataset {
public:
  struct Column {
    std::string name;
    std::vector<double> values;
  };

  explicit Dataset(std::vector<Column> columns) : columns_(std::move(columns)) { validate(); }

  Dataset(std::initializer_list<std::pair<std::string, std::vector<double>>> columns) {
    for (const auto& [name, values] : columns) columns_.push_back({name, values});
    validate();
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t column_count() const noexcept { return columns_.size(); }
  const std::vector<Column>& columns() const noexcept { return columns_; }

  bool has_column(const std::string& name) const noexcept { return find(name) != nullptr; }

  std::span<const double> column(const std::string& name) const {
    if (const Column* c = find(name)) return c->values;
    throw ColumnNotFound(name);
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    out.reserve(columns_.size());
    for (const auto& c : columns_) out.push_back(c.name);
    return out;
  }

  /// Row-wise product of the direction's factors (all ones for unity).
  std::vector<double> evaluate(const Direction& dir) const {
    std::vector<double> out(rows_, 1.0);
    for (const auto& factor : dir.factors()) {
      const auto values = column(factor);
      for (std::size_t i = 0; i < rows_; ++i) out[i] *= values[i];
    }
    return out;
  }

  /// Throws ColumnNotFound for the first factor not present.
  void require(const Direction& dir) const {
    for (const auto& factor : dir.factors()) {
      if (!has_column(factor)) throw ColumnNotFound(factor);
    }
  }

  /// Every row repeated `times` times in block order (the whole table, then again).
  Dataset replicated(std::size_t times) const {
    std::vector<Column> out;
    for (const auto& c : columns_) {
      Column r{c.name, {}};
      r.values.reserve(c.values.size() * times);
      for (std::size_t k = 0; k < times; ++k)
        r.values.insert(r.values.end(), c.values.begin(), c.values.end());
      out.push_back(std::move(r));
    }
    return Dataset(std::move(out));
  }

private:
  const Column* find(const std::string& name) const noexcept {
    for (const auto& c : columns_) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  void validate() {
    if (columns_.empty() || columns_.front().values.empty()) throw EmptyData();
    rows_ = columns_.front().values.size();
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      const auto& c = columns_[i];
      for (std::size_t j = 0; j < i; ++j) {
        if (columns_[j].name == c.name) throw DataError("duplicate column name: '" + c.name + "'");
      }
      if (c.values.size() != rows_) {
        throw DataError("column '" + c.name + "' has " + std::to_string(c.values.size()) +
                        " values, expected " + std::to_string(rows_));
      }
      for (std::size_t r = 0; r < rows_; ++r) {
        if (!std::isfinite(c.values[r])) {
          throw DataError("non-finite value in column '" + c.name + "' at row " +
                          std::to_string(r + 1));
        }
      }
    }
  }

  std::vector<Column> columns_;
  std::size_t rows_ = 0;
};

}  // namespace latreg
