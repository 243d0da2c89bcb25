#pragma once

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "latreg/csv.hpp"
#include "latreg/errors.hpp"
#include "latreg/estimators.hpp"
#include "latreg/means.hpp"
#include "latreg/measures.hpp"
#include "latreg/model_parser.hpp"
#include "latreg/report.hpp"
#include "latreg/simulate.hpp"

namespace latreg::cli {

/// Process exit codes. Stable contract for scripts.
enum ExitCode : int {
  success = 0,
  usage_error = 2,
  data_error = 3,
  singular_system = 4,
};

inline constexpr const char* model_grammar =
    "Model expressions:  <lhs> = <term> (+ <term>)*\n"
    "  lhs   1 (non-response model) or a column name\n"
    "  term  a column, 1 (intercept), or a product such as x*y\n"
    "  e.g.  \"y = 1 + x\"   \"1 = x + y\"   \"1 = x + y + x*y\"";

namespace detail {

struct Options {
  std::string input;
  std::vector<std::string> columns;
  std::string model;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t n = 1000;
  double mu = 100.0;
  double sigma = 1.0;
  std::size_t trials = 100;
};

inline Dataset load(const Options& opt, const ColumnSelection& selection, std::istream& in) {
  if (opt.input == "-") return read_csv(in, selection);
  return read_csv_file(opt.input, selection);
}

inline void require_column_count(const Options& opt, std::size_t lo, std::size_t hi) {
  if (opt.columns.size() < lo || opt.columns.size() > hi) {
    throw PreconditionViolation("--columns takes " + std::to_string(lo) + " to " +
                                std::to_string(hi) + " names, got " +
                                std::to_string(opt.columns.size()));
  }
  for (std::size_t i = 0; i < opt.columns.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (opt.columns[i] == opt.columns[j]) {
        throw PreconditionViolation("column '" + opt.columns[i] + "' listed twice");
      }
    }
  }
}

inline void emit(const Report& report, const Options& opt, std::ostream& out) {
  out << write_report(report, opt.format == "json" ? ReportFormat::json : ReportFormat::text);
}

inline int cmd_measures(const Options& opt, std::istream& in, std::ostream& out) {
  require_column_count(opt, 2, 3);
  const Dataset data = load(opt, {opt.columns, {}}, in);
  emit({lattice_measures(data, opt.columns), {}}, opt, out);
  return success;
}

inline int cmd_means(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  require_column_count(opt, 1, 3);
  const Dataset data = load(opt, {opt.columns, {}}, in);
  Report report;
  report.measures.push_back({"n", static_cast<double>(data.rows())});
  auto attempt = [&](const std::string& name, auto&& compute) {
    try {
      report.measures.push_back({name, compute()});
    } catch (const ZeroWeight& e) {
      err << "note: " << name << " skipped: " << e.what() << "\n";
    }
  };
  for (const auto& c : opt.columns) {
    attempt("mean_" + c, [&] { return standard_mean(data, c); });
    attempt("self_weighting_mean_" + c, [&] { return self_weighting_mean(data, c); });
    for (const auto& w : opt.columns) {
      if (w == c) continue;
      attempt("weighted_mean_" + c + "_by_" + w, [&] { return weighted_mean(data, c, w); });
    }
  }
  emit(report, opt, out);
  return success;
}

inline int cmd_fit(const Options& opt, std::istream& in, std::ostream& out) {
  const ModelSpec spec = parse_model(opt.model);
  std::vector<std::string> columns;
  auto note = [&](const Direction& d) {
    for (const auto& f : d.factors()) {
      if (std::find(columns.begin(), columns.end(), f) == columns.end()) columns.push_back(f);
    }
  };
  // Regressors first so the measure keys line up with the fit determinants.
  for (const auto& r : spec.regressors) note(r);
  note(spec.response);
  if (columns.empty()) throw PreconditionViolation("model references no columns");

  const Dataset data = load(opt, {columns, {}}, in);
  const FitResult result = fit(data, spec);
  Report report;
  if (columns.size() <= 3) report.measures = lattice_measures(data, columns);
  report.rotations.push_back(to_row(result));
  emit(report, opt, out);
  return success;
}

inline int cmd_rotate(const Options& opt, std::istream& in, std::ostream& out) {
  require_column_count(opt, 2, 3);
  const Dataset data = load(opt, {opt.columns, {}}, in);
  std::vector<Direction> dirs{Direction::unity()};
  for (const auto& c : opt.columns) dirs.push_back(Direction::column(c));

  Report report;
  report.measures = lattice_measures(data, opt.columns);
  bool any_ok = false;
  for (const auto& outcome : fit_all_rotations(data, dirs)) {
    any_ok = any_ok || outcome.ok();
    report.rotations.push_back(to_row(outcome));
  }
  emit(report, opt, out);
  return any_ok ? success : singular_system;
}

inline int cmd_simulate(const Options& opt, std::ostream& out) {
  const SimulationParams params{opt.seed, opt.n, opt.mu, opt.sigma, opt.trials};
  const SimulationSummary s = simulate_weighted_means(params);
  Report report;
  report.measures = {
      {"n", static_cast<double>(params.n)},
      {"trials", static_cast<double>(params.trials)},
      {"mu", params.mu},
      {"sigma", params.sigma},
      {"max_abs_weighted_minus_standard", s.max_weighted_deviation},
      {"mean_abs_weighted_minus_standard", s.mean_weighted_deviation},
      {"max_abs_self_weighting_minus_standard", s.max_self_weighting_deviation},
      {"mean_abs_self_weighting_minus_standard", s.mean_self_weighting_deviation},
  };
  emit(report, opt, out);
  return success;
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`; `-` as input reads `in`.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  detail::Options opt;
  CLI::App app{"Lattice-design regression: vertex sums, determinant measures, weighted means "
               "and Cramer's-rule fits over unity and up to three measures."};
  app.name("latreg");
  app.footer(model_grammar);
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "CSV file with a header row, or - for stdin")
        ->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_columns = [&](CLI::App* sub, const std::string& help) {
    sub->add_option("--columns", opt.columns, help)->delimiter(',')->required();
  };

  auto* measures = app.add_subcommand("measures", "Vertices and determinant measures");
  add_input(measures);
  add_columns(measures, "Two or three columns, e.g. x,y or x,y,z");
  add_format(measures);

  auto* means = app.add_subcommand("means", "Standard, self-weighting and cross-weighted means");
  add_input(means);
  add_columns(means, "One to three columns");
  add_format(means);

  auto* fit_cmd = app.add_subcommand("fit", "Fit one model by Cramer's rule");
  add_input(fit_cmd);
  fit_cmd->add_option("--model", opt.model, "Model expression, e.g. \"1 = x + y\"")->required();
  add_format(fit_cmd);
  fit_cmd->footer(model_grammar);

  auto* rotate = app.add_subcommand("rotate", "Fit every rotation of unity plus the columns");
  add_input(rotate);
  add_columns(rotate, "Two or three columns");
  add_format(rotate);

  auto* simulate = app.add_subcommand(
      "simulate", "Monte Carlo check of randomly weighted and self-weighting means");
  simulate->add_option("--seed", opt.seed, "Seed for the mt19937_64 stream")->required();
  simulate->add_option("--n", opt.n, "Observations per trial")->capture_default_str();
  simulate->add_option("--mu", opt.mu, "Normal mean of x")->capture_default_str();
  simulate->add_option("--sigma", opt.sigma, "Normal standard deviation of x")
      ->capture_default_str();
  simulate->add_option("--trials", opt.trials, "Number of trials")->capture_default_str();
  add_format(simulate);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? success : usage_error;
  }

  try {
    if (*measures) return detail::cmd_measures(opt, in, out);
    if (*means) return detail::cmd_means(opt, in, out, err);
    if (*fit_cmd) return detail::cmd_fit(opt, in, out);
    if (*rotate) return detail::cmd_rotate(opt, in, out);
    return detail::cmd_simulate(opt, out);
  } catch (const ModelParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const PreconditionViolation& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const SingularSystem& e) {
    err << "error: " << e.what() << "\n";
    return singular_system;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return data_error;
  }
}

inline int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), in, out, err);
}

}  // namespace latreg::cli
