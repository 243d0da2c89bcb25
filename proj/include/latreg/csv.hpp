#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "latreg/dataset.hpp"
#include "latreg/errors.hpp"
#include "latreg/numbers.hpp"

namespace latreg {

/// An extra column computed row-wise as the product of existing columns.
struct DerivedColumn {
  std::string name;
  std::vector<std::string> factors;
};

/// Which header columns to load, plus derived interaction columns.
/// An empty `names` list selects every header column.
struct ColumnSelection {
  std::vector<std::string> names;
  std::vector<DerivedColumn> derived;
};

namespace detail {

/// Splits comma-separated text into records. Double quotes delimit fields
/// that may contain commas, newlines or doubled quotes. Blank lines are
/// dropped; each record carries its 1-based physical line number.
struct CsvRecord {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

inline std::vector<CsvRecord> split_csv(const std::string& text) {
  std::vector<CsvRecord> records;
  CsvRecord current;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line = 1;
  current.line = 1;

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    const bool blank = current.fields.size() == 1 && current.fields.front().empty();
    if (!blank) records.push_back(std::move(current));
    current = CsvRecord{};
    current.line = line;
  };

  std::size_t i = 0;
  if (text.rfind("\xEF\xBB\xBF", 0) == 0) i = 3;  // UTF-8 byte order mark
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field_started && field.find_first_not_of(" \t") == std::string::npos) {
          field.clear();
          in_quotes = true;
          field_started = true;
        } else {
          field += c;
        }
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        ++line;
        end_record();
        break;
      default:
        field += c;
    }
  }
  if (in_quotes) throw CsvError("unterminated quoted field", 0, "");
  if (!field.empty() || !current.fields.empty()) end_record();
  return records;
}

inline std::string trimmed(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

}  // namespace detail

/// Reads comma-separated text with a mandatory header row.
inline Dataset read_csv(std::istream& in, const ColumnSelection& selection = {}) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const auto records = detail::split_csv(text);
  if (records.empty()) throw CsvError("missing header row", 0, "");

  std::vector<std::string> header;
  for (const auto& h : records.front().fields) header.push_back(detail::trimmed(h));

  auto header_index = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw CsvError("header has no column named '" + name + "'", 0, name);
  };

  const std::vector<std::string> names = selection.names.empty() ? header : selection.names;
  std::vector<std::size_t> index;
  for (const auto& n : names) index.push_back(header_index(n));

  if (records.size() < 2) throw EmptyData("CSV has a header but no data rows");

  std::vector<Dataset::Column> columns;
  for (const auto& n : names) columns.push_back({n, {}});
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != header.size()) {
      throw CsvError("row " + std::to_string(r) + " (line " + std::to_string(rec.line) + ") has " +
                         std::to_string(rec.fields.size()) + " fields, header has " +
                         std::to_string(header.size()),
                     r, "");
    }
    for (std::size_t c = 0; c < names.size(); ++c) {
      const auto& cell = rec.fields[index[c]];
      const auto value = parse_number(cell);
      if (!value) {
        throw CsvError("non-numeric cell '" + cell + "' at row " + std::to_string(r) +
                           ", column " + names[c],
                       r, names[c]);
      }
      columns[c].values.push_back(*value);
    }
  }

  for (const auto& d : selection.derived) {
    for (const auto& c : columns) {
      if (c.name == d.name) throw DataError("derived column '" + d.name + "' duplicates a name");
    }
    if (d.factors.empty()) throw DataError("derived column '" + d.name + "' has no factors");
    std::vector<std::vector<double>> sources;
    for (const auto& f : d.factors) {
      const Dataset::Column* found = nullptr;
      for (const auto& c : columns) {
        if (c.name == f) found = &c;
      }
      if (found) {
        sources.push_back(found->values);
        continue;
      }
      // Factor not selected: pull it straight from the header.
      const std::size_t hi = header_index(f);
      std::vector<double> values;
      for (std::size_t r = 1; r < records.size(); ++r) {
        const auto v = parse_number(records[r].fields[hi]);
        if (!v) {
          throw CsvError("non-numeric cell '" + records[r].fields[hi] + "' at row " +
                             std::to_string(r) + ", column " + f,
                         r, f);
        }
        values.push_back(*v);
      }
      sources.push_back(std::move(values));
    }
    Dataset::Column derived{d.name, std::vector<double>(records.size() - 1, 1.0)};
    for (const auto& s : sources) {
      for (std::size_t r = 0; r < s.size(); ++r) derived.values[r] *= s[r];
    }
    columns.push_back(std::move(derived));
  }
  return Dataset(std::move(columns));
}

inline Dataset read_csv(const std::string& text, const ColumnSelection& selection = {}) {
  std::istringstream in(text);
  return read_csv(in, selection);
}

inline Dataset read_csv_file(const std::string& path, const ColumnSelection& selection = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  return read_csv(in, selection);
}

/// Header plus rows, values in shortest round-trip form.
inline void write_csv(const Dataset& data, std::ostream& out) {
  auto quoted = [](const std::string& name) {
    if (name.find_first_of(",\"\n\r") == std::string::npos) return name;
    std::string q = "\"";
    for (char ch : name) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  const auto& cols = data.columns();
  for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << quoted(cols[c].name);
  out << '\n';
  for (std::size_t r = 0; r < data.rows(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out << (c ? "," : "") << format_number(cols[c].values[r]);
    }
    out << '\n';
  }
}

}  // namespace latreg
