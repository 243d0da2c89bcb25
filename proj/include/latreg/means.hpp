#pragma once

#include <cmath>
#include <string>

#include "latreg/dataset.hpp"
#include "latreg/direction.hpp"
#include "latreg/errors.hpp"
#include "latreg/summation.hpp"

namespace latreg {

/// Start vertex (a,b) supplies the weights a_i*b_i; target d is the
/// direction whose central tendency is estimated.
struct MeanRequest {
  Direction a;
  Direction b;
  Direction target;
};

/// sum(a*b*d) / sum(a*b). Throws ZeroWeight when |sum(ab)| <= 1e-12 * sum|ab|.
inline double mean_operator(const Dataset& data, const MeanRequest& req) {
  const auto weights = data.evaluate(req.a * req.b);
  const auto target = data.evaluate(req.target);
  CompensatedSum num, den, mag;
  for (std::size_t i = 0; i < data.rows(); ++i) {
    num.add(weights[i] * target[i]);
    den.add(weights[i]);
    mag.add(std::abs(weights[i]));
  }
  const double w = den.value();
  if (std::abs(w) <= 1e-12 * mag.value()) {
    throw ZeroWeight("weights V(" + req.a.label() + "," + req.b.label() +
                         ") sum to zero; mean in direction " + req.target.label() + " is undefined",
                     w);
  }
  return num.value() / w;
}

/// Level-one mean sum(x)/n.
inline double standard_mean(const Dataset& data, const std::string& col) {
  data.require(Direction::column(col));
  return mean_operator(data, {Direction::unity(), Direction::unity(), Direction::column(col)});
}

/// sum(x^2)/sum(x), the reciprocal of the least-squares fit of 1 = alpha*x.
inline double self_weighting_mean(const Dataset& data, const std::string& col) {
  const auto x = Direction::column(col);
  data.require(x);
  return mean_operator(data, {Direction::unity(), x, x});
}

/// sum(x*w)/sum(w).
inline double weighted_mean(const Dataset& data, const std::string& col,
                            const std::string& weight_col) {
  const auto x = Direction::column(col);
  const auto w = Direction::column(weight_col);
  data.require(x);
  data.require(w);
  return mean_operator(data, {Direction::unity(), w, x});
}

}  // namespace latreg
