#include <gtest/gtest.h>

#include <cstring>
#include <sstream>
#include <string>

#include "latreg/csv.hpp"
#include "latreg/estimators.hpp"
#include "latreg/measures.hpp"
#include "latreg/report.hpp"
#include "oracles.hpp"

using namespace latreg;

TEST(ReadCsv, SelectsColumns) {
  const Dataset d = read_csv(std::string("x,y\n1,2\n2,3\n3,5"), {{"x", "y"}, {}});
  EXPECT_EQ(d.rows(), 3u);
  EXPECT_EQ(d.names(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(d.column("y")[2], 5.0);
}

TEST(ReadCsv, DerivedInteractionColumn) {
  const Dataset d = read_csv(std::string("x,y\n1,2\n2,3\n3,5\n"), {{"x", "y"}, {{"xy", {"x", "y"}}}});
  const auto xy = d.column("xy");
  EXPECT_EQ(std::vector<double>(xy.begin(), xy.end()), (std::vector<double>{2, 6, 15}));
}

TEST(ReadCsv, QuotingCrlfAndScientificNotation) {
  const Dataset d = read_csv(std::string("\"a\",\"b, c\",note\r\n1e3,\"-2.5\",\"he said \"\"hi\"\"\"\r\n"
                                         " +4 ,5E-1,x\r\n\r\n"),
                             {{"a", "b, c"}, {}});
  EXPECT_EQ(d.rows(), 2u);
  EXPECT_EQ(d.column("a")[0], 1000.0);
  EXPECT_EQ(d.column("a")[1], 4.0);
  EXPECT_EQ(d.column("b, c")[0], -2.5);
  EXPECT_EQ(d.column("b, c")[1], 0.5);
}

TEST(ReadCsv, AllColumnsWhenSelectionEmpty) {
  const Dataset d = read_csv(std::string("p,q,r\n1,2,3\n"));
  EXPECT_EQ(d.column_count(), 3u);
}

TEST(ReadCsv, NonNumericCellReportsRowAndColumn) {
  try {
    read_csv(std::string("x,y\n1,apple"), {{"x", "y"}, {}});
    FAIL() << "expected CsvError";
  } catch (const CsvError& e) {
    EXPECT_EQ(e.row(), 1u);
    EXPECT_EQ(e.column(), "y");
  }
}

TEST(ReadCsv, Errors) {
  EXPECT_THROW(read_csv(std::string("x,y\n1,2\n"), {{"z"}, {}}), CsvError);
  EXPECT_THROW(read_csv(std::string("x,y\n1,2\n3\n"), {{"x"}, {}}), CsvError);
  EXPECT_THROW(read_csv(std::string("x,y\n"), {{"x"}, {}}), EmptyData);
  EXPECT_THROW(read_csv(std::string(""), {}), CsvError);
  EXPECT_THROW(read_csv(std::string("x\n1,5\n"), {}), CsvError);
  EXPECT_THROW(read_csv(std::string("x,y\n1,\n"), {{"y"}, {}}), CsvError);
  EXPECT_THROW(read_csv(std::string("x\n1,5\n"), {}), CsvError);
  EXPECT_THROW(read_csv(std::string("x\n\"1\n"), {}), CsvError);
  EXPECT_THROW(read_csv(std::string("x\n1e999\n"), {}), CsvError);
  EXPECT_THROW(read_csv(std::string("x\nnan\n"), {}), CsvError);
  EXPECT_THROW(read_csv(std::string("x\n1,5\n"), {}), CsvError);
  // Comma decimal separators are not numbers.
  EXPECT_THROW(read_csv(std::string("x;y\n1;5\n"), {}), CsvError);
  EXPECT_THROW(read_csv(std::string("x,y\n1,2\n"), {{"x"}, {{"x", {"y"}}}}), DataError);
}

TEST(ReadCsv, ParseSerializeRoundTripIsExact) {
  oracle::RandomColumns rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = rng.size(1, 30);
    auto a = rng.column(n, 0.0, 1e6);
    auto b = rng.column(n, 0.0, 1e-7);
    a[0] = 0.1;
    const Dataset original{{"a", a}, {"b", b}};
    std::ostringstream out;
    write_csv(original, out);
    const Dataset back = read_csv(out.str(), {});
    for (const auto& name : {"a", "b"}) {
      const auto p = original.column(name);
      const auto q = back.column(name);
      ASSERT_EQ(p.size(), q.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        ASSERT_EQ(std::memcmp(&p[i], &q[i], sizeof(double)), 0);
      }
    }
  }
}

namespace {

Report d1_rotation_report() {
  const Dataset d = read_csv(std::string("x,y\n1,2\n2,3\n3,5\n"));
  Report report;
  report.measures = lattice_measures(d, {"x", "y"});
  for (const auto& r : fit_all_rotations(
           d, {Direction::unity(), Direction::column("x"), Direction::column("y")})) {
    report.rotations.push_back(to_row(r));
  }
  return report;
}

double measure(const Report& r, const std::string& name) {
  for (const auto& m : r.measures) {
    if (m.name == name) return m.value;
  }
  throw std::runtime_error("no measure " + name);
}

}  // namespace

TEST(LatticeMeasures, NamedCatalogOnD1) {
  const auto r = d1_rotation_report();
  EXPECT_EQ(measure(r, "delta_11xx"), 6.0);
  EXPECT_EQ(measure(r, "delta_11yy"), 14.0);
  EXPECT_EQ(measure(r, "delta_11xy"), 9.0);
  EXPECT_EQ(measure(r, "delta_1yxx"), 2.0);
  EXPECT_EQ(measure(r, "delta_1xyy"), -2.0);
  EXPECT_EQ(measure(r, "delta_1yx1"), -9.0);
  EXPECT_EQ(measure(r, "delta_xxyy"), 3.0);
  EXPECT_DOUBLE_EQ(measure(r, "sigma2_11xx"), 6.0 / 9.0);
  EXPECT_EQ(measure(r, "V(x,y)"), 23.0);
}

TEST(LatticeMeasures, LongColumnNamesAreSeparated) {
  const Dataset d = read_csv(std::string("temp,wind,p\n1,2,1\n2,3,2\n3,5,2\n"));
  const auto ms = lattice_measures(d, {"temp", "wind", "p"});
  bool found = false;
  for (const auto& m : ms) found = found || m.name == "delta_1_1_temp_wind";
  EXPECT_TRUE(found);
  EXPECT_EQ(ms.back().name, "delta_temp_temp_wind_wind_p_p");
  EXPECT_EQ(ms.back().value, 1.0);
}

TEST(WriteReport, JsonCarriesMeasuresAndRotations) {
  const auto report = d1_rotation_report();
  const std::string json = write_report(report, ReportFormat::json);
  EXPECT_NE(json.find("\"delta_xxyy\": 3"), std::string::npos);
  const auto j = nlohmann::json::parse(json);
  const auto& unity = j.at("rotations").at(2);
  EXPECT_EQ(unity.at("response"), "1");
  EXPECT_DOUBLE_EQ(unity.at("coefficients").at(0).get<double>(), -2.0 / 3.0);
  EXPECT_DOUBLE_EQ(unity.at("coefficients").at(1).get<double>(), 2.0 / 3.0);
  EXPECT_EQ(unity.at("flag"), "well-posed");
}

TEST(WriteReport, JsonRoundTripIsBitExact) {
  const auto report = d1_rotation_report();
  const auto back = parse_report_json(write_report(report, ReportFormat::json));
  EXPECT_EQ(back, report);

  oracle::RandomColumns rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = rng.size(4, 20);
    const Dataset d{{"x", rng.column(n)}, {"y", rng.column(n, 1.0)}, {"z", rng.column(n, 3.0)}};
    Report r;
    r.measures = lattice_measures(d, {"x", "y", "z"});
    for (const auto& o : fit_all_rotations(d, {Direction::unity(), Direction::column("x"),
                                               Direction::column("y"), Direction::column("z")})) {
      r.rotations.push_back(to_row(o));
    }
    ASSERT_EQ(parse_report_json(write_report(r, ReportFormat::json)), r);
  }
}

TEST(WriteReport, FailedRotationRoundTrips) {
  const Dataset d = read_csv(std::string("x,y\n1,1\n2,2\n3,3\n"));
  Report r;
  for (const auto& o : fit_all_rotations(
           d, {Direction::unity(), Direction::column("x"), Direction::column("y")})) {
    r.rotations.push_back(to_row(o));
  }
  EXPECT_EQ(r.rotations.back().flag, "singular");
  EXPECT_EQ(parse_report_json(write_report(r, ReportFormat::json)), r);
  EXPECT_NE(write_report(r, ReportFormat::text).find("singular"), std::string::npos);
}

TEST(WriteReport, TextTableHasMeasuresAndRotations) {
  const std::string text = write_report(d1_rotation_report(), ReportFormat::text);
  EXPECT_NE(text.find("delta_xxyy"), std::string::npos);
  EXPECT_NE(text.find("1 = x + y"), std::string::npos);
  EXPECT_NE(text.find("-0.6666666666666666, 0.6666666666666666"), std::string::npos);
}

TEST(WriteReport, EmptyIsAPreconditionViolation) {
  EXPECT_THROW(write_report(Report{}, ReportFormat::json), PreconditionViolation);
  EXPECT_THROW(write_report(Report{}, ReportFormat::text), PreconditionViolation);
}

TEST(ParseReport, SchemaErrors) {
  EXPECT_THROW(parse_report_json("{"), DataError);
  EXPECT_THROW(parse_report_json("{\"measures\": {}}"), DataError);
}
