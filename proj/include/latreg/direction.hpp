#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace latreg {

/// A measure axis: unity (no factors), a single column, or a product of
/// columns such as the interaction x*y. Factors form a multiset, so
/// x*y == y*x and x*x is a legitimate second-order direction.
class Direction {
public:
  /// Unity, the constant measure 1.
  Direction() = default;

  explicit Direction(std::vector<std::string> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
  }

  static Direction unity() { return Direction{}; }

  static Direction column(std::string name) {
    return Direction(std::vector<std::string>{std::move(name)});
  }

  static Direction product(std::initializer_list<std::string> names) {
    return Direction(std::vector<std::string>(names));
  }

  bool is_unity() const noexcept { return factors_.empty(); }
  bool is_column() const noexcept { return factors_.size() == 1; }

  /// Number of column factors; unity has degree 0.
  std::size_t degree() const noexcept { return factors_.size(); }

  const std::vector<std::string>& factors() const noexcept { return factors_; }

  /// "1", "x" or "x*y".
  std::string label() const {
    if (factors_.empty()) return "1";
    std::string out = factors_.front();
    for (std::size_t i = 1; i < factors_.size(); ++i) {
      out += '*';
      out += factors_[i];
    }
    return out;
  }

  Direction operator*(const Direction& other) const {
    std::vector<std::string> merged = factors_;
    merged.insert(merged.end(), other.factors_.begin(), other.factors_.end());
    return Direction(std::move(merged));
  }

  friend bool operator==(const Direction&, const Direction&) = default;
  friend auto operator<=>(const Direction&, const Direction&) = default;

private:
  std::vector<std::string> factors_;
};

}  // namespace latreg
