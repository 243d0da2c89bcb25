#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latreg/dataset.hpp"
#include "latreg/direction.hpp"
#include "latreg/errors.hpp"
#include "latreg/lattice.hpp"
#include "latreg/numbers.hpp"
#include "latreg/summation.hpp"

namespace latreg {

/// response = sum_j coef_j * regressors_j. A unity response makes this a
/// non-response (implicit) model; unity as a regressor is an explicit intercept.
struct ModelSpec {
  Direction response;
  std::vector<Direction> regressors;

  bool is_non_response() const noexcept { return response.is_unity(); }

  void validate() const {
    if (regressors.empty() || regressors.size() > 3) {
      throw PreconditionViolation("a model needs 1 to 3 regressors, got " +
                                  std::to_string(regressors.size()));
    }
    for (std::size_t i = 0; i < regressors.size(); ++i) {
      if (regressors[i] == response) {
        throw PreconditionViolation("response " + response.label() + " also appears as a regressor");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (regressors[i] == regressors[j]) {
          throw PreconditionViolation("regressor " + regressors[i].label() + " appears twice");
        }
      }
    }
  }

  /// "y = 1 + x", "1 = x + y + x*y".
  std::string label() const {
    std::string out = response.label() + " =";
    for (std::size_t i = 0; i < regressors.size(); ++i) {
      out += i == 0 ? " " : " + ";
      out += regressors[i].label();
    }
    return out;
  }

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

enum class ConditionFlag { well_posed, near_singular };

inline const char* to_string(ConditionFlag f) noexcept {
  return f == ConditionFlag::well_posed ? "well-posed" : "near-singular";
}

/// Relative threshold on |det G| / prod(row norms of G) below which a fit is
/// flagged near-singular.
inline constexpr double near_singular_tolerance = 1e-9;
/// Below this the determinant is indistinguishable from rounding noise in the
/// vertex sums and the system is rejected as singular.
inline constexpr double singular_tolerance = 1e-13;

/// Cramer's-rule solution of the normal equations.
///
/// For two regressors (a,b) and response d the determinants are the lattice
/// measures: the denominator is Delta_aabb and the numerators are
/// (Delta_adbb, Delta_aabd). With regressors (1,x) and response y this gives
/// beta0 = Delta_1yxx/Delta_11xx and beta1 = Delta_11xy/Delta_11xx. Note the
/// slope numerator is Delta_11xy; Delta_1yx1 = -Delta_11xy would flip the sign
/// of the ordinary least-squares slope. For three regressors the denominator
/// is the Form I determinant and numerator i replaces column i with V(., d).
struct FitResult {
  ModelSpec spec;
  std::vector<double> coefficients;
  double denominator = 0.0;
  std::vector<double> numerators;
  double sse = 0.0;
  std::vector<double> residuals;
  ConditionFlag condition_flag = ConditionFlag::well_posed;
};

namespace detail {

inline std::vector<Direction> lattice_directions(const ModelSpec& spec) {
  std::vector<Direction> dirs{Direction::unity()};
  for (const auto& r : spec.regressors) dirs.push_back(r);
  dirs.push_back(spec.response);
  return dirs;
}

inline std::vector<double> predictions(const Dataset& data, const ModelSpec& spec,
                                       const std::vector<double>& coefficients) {
  std::vector<CompensatedSum> acc(data.rows());
  for (std::size_t j = 0; j < spec.regressors.size(); ++j) {
    const auto values = data.evaluate(spec.regressors[j]);
    for (std::size_t i = 0; i < data.rows(); ++i) acc[i].add(coefficients[j] * values[i]);
  }
  std::vector<double> out(data.rows());
  for (std::size_t i = 0; i < data.rows(); ++i) out[i] = acc[i].value();
  return out;
}

}  // namespace detail

/// Per-row residuals and their squared sum. For non-response fits the
/// system error sum(1 - sum_j alpha_j * reg_j)^2 is reported separately
/// (it coincides with sse since the response is unity).
struct ResidualReport {
  std::vector<double> residuals;
  double sse = 0.0;
  std::optional<double> system_error;
};

inline ResidualReport residual_report(const FitResult& fit, const Dataset& data) {
  ResidualReport out;
  const auto response = data.evaluate(fit.spec.response);
  const auto predicted = detail::predictions(data, fit.spec, fit.coefficients);
  out.residuals.resize(data.rows());
  CompensatedSum sse;
  for (std::size_t i = 0; i < data.rows(); ++i) {
    out.residuals[i] = response[i] - predicted[i];
    sse.add(out.residuals[i] * out.residuals[i]);
  }
  out.sse = sse.value();
  if (fit.spec.is_non_response()) out.system_error = out.sse;
  return out;
}

inline FitResult fit(const Dataset& data, const ModelSpec& spec) {
  spec.validate();
  const Lattice lat = build_lattice(data, detail::lattice_directions(spec));
  const auto& regs = spec.regressors;
  const Direction& d = spec.response;
  const std::size_t k = regs.size();

  FitResult out;
  out.spec = spec;
  switch (k) {
    case 1:
      out.denominator = lat.vertex(regs[0], regs[0]);
      out.numerators = {lat.vertex(regs[0], d)};
      break;
    case 2:
      out.denominator = det2(lat, regs[0], regs[0], regs[1], regs[1]);
      out.numerators = {det2(lat, regs[0], d, regs[1], regs[1]),
                        det2(lat, regs[0], regs[0], regs[1], d)};
      break;
    default: {
      const std::array<Direction, 3> rows{regs[0], regs[1], regs[2]};
      out.denominator = form_determinant(lat, kind::Form1{regs[0], regs[1], regs[2]});
      for (std::size_t i = 0; i < 3; ++i) {
        auto cols = rows;
        cols[i] = d;
        out.numerators.push_back(det3_general(lat, rows, cols));
      }
    }
  }

  double scale = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    CompensatedSum sq;
    for (std::size_t j = 0; j < k; ++j) {
      const double g = lat.vertex(regs[i], regs[j]);
      sq.add(g * g);
    }
    scale *= std::sqrt(sq.value());
  }
  const double magnitude = std::abs(out.denominator);
  if (magnitude == 0.0 || magnitude <= singular_tolerance * scale) {
    throw SingularSystem("singular normal equations for '" + spec.label() +
                             "': |det G| = " + format_number(magnitude),
                         out.denominator);
  }
  if (magnitude <= near_singular_tolerance * scale) out.condition_flag = ConditionFlag::near_singular;

  out.coefficients.reserve(k);
  for (double num : out.numerators) out.coefficients.push_back(num / out.denominator);

  auto report = residual_report(out, data);
  out.residuals = std::move(report.residuals);
  out.sse = report.sse;
  return out;
}

/// Outcome of one rotation: either a fit or the error that stopped it.
struct RotationOutcome {
  ModelSpec spec;
  std::optional<FitResult> result;
  std::string error;
  /// Set when the rotation failed on a singular system.
  std::optional<double> singular_determinant;

  bool ok() const noexcept { return result.has_value(); }
};

/// Every direction takes the response role in turn with the rest as
/// regressors (kept in the given order). Output order: non-unity directions
/// in the given order, unity last.
inline std::vector<RotationOutcome> fit_all_rotations(const Dataset& data,
                                                      const std::vector<Direction>& dirs) {
  if (dirs.size() != 3 && dirs.size() != 4) {
    throw PreconditionViolation("rotations need unity plus 2 or 3 directions");
  }
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (dirs[i] == dirs[j]) {
        throw PreconditionViolation("direction " + dirs[i].label() + " is listed twice");
      }
    }
  }
  if (std::find(dirs.begin(), dirs.end(), Direction::unity()) == dirs.end()) {
    throw PreconditionViolation("rotations need unity among the directions");
  }

  std::vector<Direction> responses;
  for (const auto& d : dirs) {
    if (!d.is_unity()) responses.push_back(d);
  }
  responses.push_back(Direction::unity());

  std::vector<RotationOutcome> out;
  for (const auto& response : responses) {
    RotationOutcome r;
    r.spec.response = response;
    for (const auto& d : dirs) {
      if (d != response) r.spec.regressors.push_back(d);
    }
    try {
      r.result = fit(data, r.spec);
    } catch (const SingularSystem& e) {
      r.error = e.what();
      r.singular_determinant = e.determinant();
    } catch (const Error& e) {
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace latreg
