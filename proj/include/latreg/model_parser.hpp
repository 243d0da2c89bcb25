#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "latreg/direction.hpp"
#include "latreg/errors.hpp"
#include "latreg/estimators.hpp"

namespace latreg {

/// Grammar (whitespace is insignificant):
///
///   model  := lhs '=' term ('+' term)*
///   lhs    := '1' | column
///   term   := factor ('*' factor)*
///   factor := '1' | column
///   column := [A-Za-z_][A-Za-z0-9_.]*
///
/// A product term such as x*y is an interaction direction. `1` as a term is
/// an explicit intercept; `1` as the left side makes a non-response model.
/// Errors carry the 0-based offset of the offending character.
class ModelParser {
public:
  explicit ModelParser(std::string_view input) : input_(input) {}

  ModelSpec parse() {
    ModelSpec spec;
    skip_space();
    const std::size_t lhs_pos = pos_;
    spec.response = parse_term();
    if (spec.response.degree() > 1) fail("left side must be 1 or a single column", lhs_pos);
    skip_space();
    if (!consume('=')) fail("expected '='", pos_);

    std::vector<std::size_t> positions;
    do {
      skip_space();
      positions.push_back(pos_);
      spec.regressors.push_back(parse_term());
      skip_space();
    } while (consume('+'));
    if (pos_ != input_.size()) fail("unexpected character", pos_);

    for (std::size_t i = 0; i < spec.regressors.size(); ++i) {
      if (spec.regressors[i] == spec.response) {
        fail("term repeats the response " + spec.response.label(), positions[i]);
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (spec.regressors[i] == spec.regressors[j]) {
          fail("duplicate term " + spec.regressors[i].label(), positions[i]);
        }
      }
      if (i == 3) fail("at most 3 terms are supported", positions[i]);
    }
    return spec;
  }

private:
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw ModelParseError(message, std::string(input_), at);
  }

  void skip_space() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    if (pos_ < input_.size() && input_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Direction parse_term() {
    std::vector<std::string> factors;
    do {
      skip_space();
      parse_factor(factors);
      skip_space();
    } while (consume('*'));
    return Direction(std::move(factors));
  }

  void parse_factor(std::vector<std::string>& factors) {
    if (pos_ >= input_.size()) fail("expected a column name or 1", pos_);
    const char c = input_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < input_.size() &&
             (std::isalnum(static_cast<unsigned char>(input_[pos_])) || input_[pos_] == '.')) {
        ++pos_;
      }
      if (input_.substr(start, pos_ - start) != "1") {
        fail("only the constant 1 may appear as a number", start);
      }
      return;
    }
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
      fail("expected a column name or 1", pos_);
    }
    const std::size_t start = pos_;
    while (pos_ < input_.size() && (std::isalnum(static_cast<unsigned char>(input_[pos_])) ||
                                    input_[pos_] == '_' || input_[pos_] == '.')) {
      ++pos_;
    }
    factors.emplace_back(input_.substr(start, pos_ - start));
  }

  std::string_view input_;
  std::size_t pos_ = 0;
};

inline ModelSpec parse_model(std::string_view expression) {
  return ModelParser(expression).parse();
}

}  // namespace latreg
