#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "latreg/errors.hpp"
#include "latreg/estimators.hpp"
#include "latreg/measures.hpp"
#include "latreg/numbers.hpp"

namespace latreg {

/// One fitted (or failed) rotation in serializable form.
struct RotationRow {
  std::string response;
  std::vector<std::string> regressors;
  std::vector<double> coefficients;
  std::optional<double> denominator;
  std::vector<double> numerators;
  std::optional<double> sse;
  std::string flag;   // well-posed | near-singular | singular | error
  std::string error;  // empty on success

  friend bool operator==(const RotationRow&, const RotationRow&) = default;
};

struct Report {
  std::vector<Measure> measures;
  std::vector<RotationRow> rotations;

  bool empty() const noexcept { return measures.empty() && rotations.empty(); }

  friend bool operator==(const Report&, const Report&) = default;
};

enum class ReportFormat { text, json };

inline RotationRow to_row(const FitResult& fit) {
  RotationRow row;
  row.response = fit.spec.response.label();
  for (const auto& r : fit.spec.regressors) row.regressors.push_back(r.label());
  row.coefficients = fit.coefficients;
  row.denominator = fit.denominator;
  row.numerators = fit.numerators;
  row.sse = fit.sse;
  row.flag = to_string(fit.condition_flag);
  return row;
}

inline RotationRow to_row(const RotationOutcome& outcome) {
  if (outcome.result) return to_row(*outcome.result);
  RotationRow row;
  row.response = outcome.spec.response.label();
  for (const auto& r : outcome.spec.regressors) row.regressors.push_back(r.label());
  row.denominator = outcome.singular_determinant;
  row.flag = outcome.singular_determinant ? "singular" : "error";
  row.error = outcome.error;
  return row;
}

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

inline std::string render_json(const Report& report) {
  ordered_json root;
  root["measures"] = ordered_json::object();
  for (const auto& m : report.measures) root["measures"][m.name] = m.value;
  root["rotations"] = ordered_json::array();
  for (const auto& r : report.rotations) {
    ordered_json row;
    row["response"] = r.response;
    row["regressors"] = r.regressors;
    row["coefficients"] = r.coefficients;
    row["denominator"] = optional_number(r.denominator);
    row["numerators"] = r.numerators;
    row["sse"] = optional_number(r.sse);
    row["flag"] = r.flag;
    if (!r.error.empty()) row["error"] = r.error;
    root["rotations"].push_back(std::move(row));
  }
  return root.dump(2) + "\n";
}

inline std::string join_numbers(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_number(values[i]);
  }
  return out;
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

inline std::string render_text(const Report& report) {
  std::string out;
  if (!report.measures.empty()) {
    std::size_t width = 0;
    for (const auto& m : report.measures) width = std::max(width, m.name.size());
    out += "measures\n";
    for (const auto& m : report.measures) {
      out += "  " + pad(m.name, width) + "  " + format_number(m.value) + "\n";
    }
  }
  if (!report.rotations.empty()) {
    if (!out.empty()) out += "\n";
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"model", "coefficients", "denominator", "sse", "flag"});
    for (const auto& r : report.rotations) {
      std::string model = r.response + " =";
      for (std::size_t i = 0; i < r.regressors.size(); ++i) {
        model += (i ? " + " : " ") + r.regressors[i];
      }
      cells.push_back({model, r.coefficients.empty() ? "-" : join_numbers(r.coefficients),
                       r.denominator ? format_number(*r.denominator) : "-",
                       r.sse ? format_number(*r.sse) : "-", r.flag});
    }
    std::vector<std::size_t> widths(cells.front().size(), 0);
    for (const auto& row : cells) {
      for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    out += "rotations\n";
    for (const auto& row : cells) {
      std::string line = " ";
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += " " + (c + 1 < row.size() ? pad(row[c], widths[c]) : row[c]);
      }
      out += line + "\n";
    }
    for (const auto& r : report.rotations) {
      if (!r.error.empty()) out += "  ! " + r.error + "\n";
    }
  }
  return out;
}

inline std::optional<double> read_optional(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace detail

/// Serializes a report. JSON keys keep a fixed order and numbers use the
/// shortest round-trip form, so parse_report_json(write_report(r)) == r.
inline std::string write_report(const Report& report, ReportFormat format) {
  if (report.empty()) throw PreconditionViolation("cannot write an empty report");
  return format == ReportFormat::json ? detail::render_json(report) : detail::render_text(report);
}

inline Report parse_report_json(const std::string& text) {
  detail::ordered_json root;
  try {
    root = detail::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed report: ") + e.what());
  }
  Report report;
  try {
    for (const auto& [name, value] : root.at("measures").items()) {
      report.measures.push_back({name, value.get<double>()});
    }
    for (const auto& r : root.at("rotations")) {
      RotationRow row;
      row.response = r.at("response").get<std::string>();
      row.regressors = r.value("regressors", std::vector<std::string>{});
      row.coefficients = r.at("coefficients").get<std::vector<double>>();
      row.denominator = detail::read_optional(r.at("denominator"));
      row.numerators = r.at("numerators").get<std::vector<double>>();
      row.sse = detail::read_optional(r.at("sse"));
      row.flag = r.at("flag").get<std::string>();
      row.error = r.value("error", std::string{});
      report.rotations.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("report does not match the schema: ") + e.what());
  }
  return report;
}

}  // namespace latreg
