#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latreg/dataset.hpp"
#include "latreg/direction.hpp"
#include "latreg/lattice.hpp"

namespace latreg {

struct Measure {
  std::string name;
  double value = 0.0;

  friend bool operator==(const Measure&, const Measure&) = default;
};

namespace detail {

/// "delta_11xy" when every label is one character, "delta_1_1_temp_wind" otherwise.
inline std::string measure_key(const std::string& prefix, const std::vector<std::string>& labels) {
  bool short_labels = true;
  for (const auto& l : labels) short_labels = short_labels && l.size() == 1;
  std::string key = prefix + "_";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0 && !short_labels) key += '_';
    key += labels[i];
  }
  return key;
}

}  // namespace detail

/// The named lattice catalog over unity and 1-3 columns: n, every vertex
/// V(a,b), the variances, covariances, internal covariances and base
/// variances (each as delta_* and as sigma2_* = delta/n^2), plus the Form I
/// determinant when three columns are given. Deterministic order.
inline std::vector<Measure> lattice_measures(const Dataset& data,
                                             const std::vector<std::string>& columns) {
  std::vector<Direction> dirs{Direction::unity()};
  for (const auto& c : columns) dirs.push_back(Direction::column(c));
  const Lattice lat = build_lattice(data, dirs);
  const double n2 = static_cast<double>(data.rows()) * static_cast<double>(data.rows());

  std::vector<Measure> out;
  out.push_back({"n", static_cast<double>(data.rows())});
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = i; j < dirs.size(); ++j) {
      out.push_back({"V(" + dirs[i].label() + "," + dirs[j].label() + ")",
                     lat.vertex(dirs[i], dirs[j])});
    }
  }

  struct Named {
    std::vector<std::string> labels;
    double delta;
  };
  std::vector<Named> deltas;
  const std::string one = "1";
  for (const auto& a : columns) {
    deltas.push_back({{one, one, a, a}, determinant(lat, kind::Variance{Direction::column(a)})});
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::size_t j = i + 1; j < columns.size(); ++j) {
      const auto& a = columns[i];
      const auto& b = columns[j];
      const auto da = Direction::column(a);
      const auto db = Direction::column(b);
      deltas.push_back({{one, one, a, b}, determinant(lat, kind::Covariance{da, db})});
      deltas.push_back({{one, b, a, a}, determinant(lat, kind::InternalCovariance{db, da})});
      deltas.push_back({{one, a, b, b}, determinant(lat, kind::InternalCovariance{da, db})});
      deltas.push_back(
          {{one, b, a, one}, determinant(lat, kind::General2{Direction::unity(), db, da,
                                                             Direction::unity()})});
      deltas.push_back({{a, a, b, b}, determinant(lat, kind::BaseVariance{da, db})});
    }
  }
  for (const auto& d : deltas) out.push_back({detail::measure_key("delta", d.labels), d.delta});
  for (const auto& d : deltas) {
    out.push_back({detail::measure_key("sigma2", d.labels), d.delta / n2});
  }
  if (columns.size() == 3) {
    const auto a = Direction::column(columns[0]);
    const auto b = Direction::column(columns[1]);
    const auto c = Direction::column(columns[2]);
    out.push_back({detail::measure_key("delta", {columns[0], columns[0], columns[1], columns[1],
                                                 columns[2], columns[2]}),
                   form_determinant(lat, kind::Form1{a, b, c})});
  }
  return out;
}

}  // namespace latreg
