#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "latreg/dataset.hpp"
#include "latreg/direction.hpp"
#include "latreg/errors.hpp"
#include "latreg/summation.hpp"

namespace latreg {

using VertexPair = std::pair<Direction, Direction>;

/// Cached vertex sums V(a,b) = sum_i a_i * b_i for every pair of a fixed set
/// of directions over one dataset. V(1,1) is the row count.
class Lattice {
public:
  /// Eagerly computes all pairwise vertices. Duplicate directions are
  /// collapsed; unity must be present.
  static Lattice build(const Dataset& data, std::vector<Direction> dirs) {
    if (dirs.empty()) throw PreconditionViolation("lattice needs at least one direction");
    std::vector<Direction> unique;
    for (auto& d : dirs) {
      if (std::find(unique.begin(), unique.end(), d) == unique.end()) unique.push_back(std::move(d));
    }
    if (std::find(unique.begin(), unique.end(), Direction::unity()) == unique.end()) {
      throw PreconditionViolation("lattice directions must include unity");
    }
    for (const auto& d : unique) data.require(d);

    Lattice lat;
    lat.rows_ = data.rows();
    lat.dirs_ = std::move(unique);
    const std::size_t k = lat.dirs_.size();

    std::vector<std::vector<double>> measures;
    measures.reserve(k);
    for (const auto& d : lat.dirs_) measures.push_back(data.evaluate(d));

    lat.vertices_.assign(k * k, Extended{});
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        ExtendedSum acc;
        for (std::size_t r = 0; r < lat.rows_; ++r) acc.add_product(measures[i][r], measures[j][r]);
        lat.vertices_[i * k + j] = acc.extended();
        lat.vertices_[j * k + i] = acc.extended();
      }
    }
    return lat;
  }

  std::size_t rows() const noexcept { return rows_; }
  const std::vector<Direction>& directions() const noexcept { return dirs_; }

  bool contains(const Direction& d) const noexcept { return index_of(d) < dirs_.size(); }

  /// Highest vertex level cached, i.e. the largest total factor count of a pair.
  std::size_t max_level() const noexcept {
    std::size_t top = 0;
    for (const auto& d : dirs_) top = std::max(top, d.degree());
    return 2 * top;
  }

  double vertex(const Direction& a, const Direction& b) const {
    return vertex_extended(a, b).value();
  }

  /// The vertex sum before rounding to double.
  const Extended& vertex_extended(const Direction& a, const Direction& b) const {
    const std::size_t i = index_of(a);
    const std::size_t j = index_of(b);
    if (i == dirs_.size() || j == dirs_.size()) {
      throw MissingVertex("vertex V(" + a.label() + "," + b.label() + ") is not cached");
    }
    return vertices_[i * dirs_.size() + j];
  }

private:
  Lattice() = default;

  std::size_t index_of(const Direction& d) const noexcept {
    return static_cast<std::size_t>(std::find(dirs_.begin(), dirs_.end(), d) - dirs_.begin());
  }

  std::size_t rows_ = 0;
  std::vector<Direction> dirs_;
  std::vector<Extended> vertices_;  // row-major k*k, symmetric
};

inline Lattice build_lattice(const Dataset& data, std::vector<Direction> dirs) {
  return Lattice::build(data, std::move(dirs));
}

/// Product of two or three vertex values.
inline double join(const Lattice& lat, std::span<const VertexPair> pairs) {
  if (pairs.size() != 2 && pairs.size() != 3) {
    throw PreconditionViolation("a join takes two or three vertices");
  }
  double out = 1.0;
  for (const auto& [a, b] : pairs) out *= lat.vertex(a, b);
  return out;
}

/// V(a,b)V(c,d) - V(a,d)V(c,b), evaluated in double-double and rounded once.
inline double det2(const Lattice& lat, const Direction& a, const Direction& b, const Direction& c,
                   const Direction& d) {
  return (lat.vertex_extended(a, b) * lat.vertex_extended(c, d) -
          lat.vertex_extended(a, d) * lat.vertex_extended(c, b))
      .value();
}

using Matrix3 = std::array<std::array<double, 3>, 3>;

inline Matrix3 vertex_matrix(const Lattice& lat, std::span<const Direction, 3> rows,
                             std::span<const Direction, 3> cols) {
  Matrix3 m{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = lat.vertex(rows[i], cols[j]);
  }
  return m;
}

/// |M| with M[i][j] = V(rows[i], cols[j]): cofactor expansion along the
/// first row over the unrounded vertex sums.
inline double det3_general(const Lattice& lat, std::span<const Direction, 3> rows,
                           std::span<const Direction, 3> cols) {
  std::array<std::array<Extended, 3>, 3> m;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = lat.vertex_extended(rows[i], cols[j]);
  }
  const Extended m0 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  const Extended m1 = m[1][0] * m[2][2] - m[1][2] * m[2][0];
  const Extended m2 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  return (m[0][0] * m0 - m[0][1] * m1 + m[0][2] * m2).value();
}

inline double det3_general(const Lattice& lat, const std::array<Direction, 3>& rows,
                           const std::array<Direction, 3>& cols) {
  return det3_general(lat, std::span<const Direction, 3>(rows), std::span<const Direction, 3>(cols));
}

namespace kind {

/// n*sum(a^2) - (sum a)^2, i.e. the determinant with indices (1,1,a,a).
struct Variance {
  Direction a;
};
/// n*sum(ab) - sum(a)*sum(b): indices (1,1,a,b).
struct Covariance {
  Direction a, b;
};
/// sum(weight)*sum(squared^2) - sum(squared)*sum(squared*weight): indices
/// (1,weight,squared,squared). Delta_1yxx is {weight=y, squared=x}.
struct InternalCovariance {
  Direction weight, squared;
};
/// sum(a^2)*sum(b^2) - sum(ab)^2: indices (a,a,b,b).
struct BaseVariance {
  Direction a, b;
};
/// Any 2x2 determinant V(a,b)V(c,d) - V(a,d)V(c,b).
struct General2 {
  Direction a, b, c, d;
};
/// Gram determinant of (a,b,c): rows and columns both (a,b,c).
struct Form1 {
  Direction a, b, c;
};
/// Form1 with the first column direction replaced by d.
struct Form2 {
  Direction a, b, c, d;
};

}  // namespace kind

using DeterminantKind = std::variant<kind::Variance, kind::Covariance, kind::InternalCovariance,
                                     kind::BaseVariance, kind::General2, kind::Form1, kind::Form2>;

inline double form_determinant(const Lattice& lat, const DeterminantKind& form) {
  if (const auto* f = std::get_if<kind::Form1>(&form)) {
    return det3_general(lat, {f->a, f->b, f->c}, {f->a, f->b, f->c});
  }
  if (const auto* f = std::get_if<kind::Form2>(&form)) {
    return det3_general(lat, {f->a, f->b, f->c}, {f->d, f->b, f->c});
  }
  throw PreconditionViolation("form_determinant expects a Form I or Form II kind");
}

/// Evaluates any determinant kind.
inline double determinant(const Lattice& lat, const DeterminantKind& k) {
  const Direction one = Direction::unity();
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, kind::Variance>) {
          return det2(lat, one, one, v.a, v.a);
        } else if constexpr (std::is_same_v<T, kind::Covariance>) {
          return det2(lat, one, one, v.a, v.b);
        } else if constexpr (std::is_same_v<T, kind::InternalCovariance>) {
          return det2(lat, one, v.weight, v.squared, v.squared);
        } else if constexpr (std::is_same_v<T, kind::BaseVariance>) {
          return det2(lat, v.a, v.a, v.b, v.b);
        } else if constexpr (std::is_same_v<T, kind::General2>) {
          return det2(lat, v.a, v.b, v.c, v.d);
        } else {
          return form_determinant(lat, k);
        }
      },
      k);
}

/// Delta / n^2: the population-scaled sigma measures (variance, covariance,
/// internal covariance, base variance).
inline double scaled_sigma(const Lattice& lat, const DeterminantKind& k) {
  if (std::holds_alternative<kind::General2>(k) || std::holds_alternative<kind::Form1>(k) ||
      std::holds_alternative<kind::Form2>(k)) {
    throw PreconditionViolation("scaled_sigma is defined for two-by-two measures only");
  }
  const double n = static_cast<double>(lat.rows());
  return determinant(lat, k) / (n * n);
}

}  // namespace latreg
