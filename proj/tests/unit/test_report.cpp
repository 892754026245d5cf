#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "ocbounds/report.hpp"

using namespace ocb;

namespace {

std::vector<GridReport> small_run() {
  RunConfig c;
  c.grids = {4, 8};
  c.ref_factor = 2;
  return run_experiment(c);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> r;
  std::stringstream ss(line);
  std::string s;
  while (std::getline(ss, s, sep)) r.push_back(s);
  return r;
}

} // namespace

TEST(Format, SixSignificantDigits) {
  EXPECT_EQ(format_number(2.384752), "2.38475");
  EXPECT_EQ(format_number(1234567.0), "1.23457e+06");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_DOUBLE_EQ(round_significant(2.384752), 2.38475);
  EXPECT_DOUBLE_EQ(round_significant(-0.000123456789), -0.000123457);
  EXPECT_TRUE(std::isnan(round_significant(std::nan(""))));
}

TEST(Row, ColumnAccess) {
  ReportRow r;
  r.set("beta", 0.5);
  EXPECT_EQ(r.get("beta"), 0.5);
  r.set("M_plus_1", 2.0);
  EXPECT_EQ(r.get("M_plus_1"), 2.0);
  EXPECT_THROW(r.get("gamma"), std::out_of_range);
}

TEST(Report, CsvHeaderAndRows) {
  const auto rows = to_rows(small_run());
  std::ostringstream out;
  write_csv(rows, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  const auto header = split(line, ',');
  ASSERT_EQ(header.size(), csv_columns.size());
  for (std::size_t i = 0; i < header.size(); ++i) EXPECT_EQ(header[i], csv_columns[i]);
  int n = 0;
  while (std::getline(in, line)) {
    const auto cells = split(line, ',');
    ASSERT_EQ(cells.size(), csv_columns.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
      EXPECT_EQ(cells[i], format_number(rows[n].get(csv_columns[i])));
    ++n;
  }
  EXPECT_EQ(n, 2);
  EXPECT_EQ(rows[0].get("grid"), 4.0);
}

TEST(Report, JsonRoundTripIsExactAndAgreesWithCsv) {
  auto rows = to_rows(small_run());
  rows[0].set("I_M1", std::nan(""));
  std::ostringstream out;
  write_json(rows, out);
  EXPECT_NE(out.str().find("null"), std::string::npos);
  std::istringstream in(out.str());
  const auto back = read_json(in);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t i = 0; i < rows[r].values.size(); ++i) {
      if (std::isnan(rows[r].values[i])) EXPECT_TRUE(std::isnan(back[r].values[i]));
      else EXPECT_EQ(back[r].values[i], rows[r].values[i]);
    }
}

TEST(Report, RowsCarryRoundedBounds) {
  const auto reports = small_run();
  const ReportRow row = to_row(reports[1]);
  EXPECT_EQ(row.get("J_plus"), round_significant(reports[1].bounds.j_plus));
  EXPECT_EQ(row.get("R4"), round_significant(reports[1].bounds.components.r4));
  EXPECT_EQ(row.get("M_plus"), round_significant(reports[1].bounds.m_plus));
  EXPECT_EQ(row.get("I_M1"), round_significant(*reports[1].bounds.i_m1));
}

TEST(Report, MalformedJsonAndUnknownFormat) {
  std::istringstream bad("{\"rows\": 3}");
  EXPECT_THROW(read_json(bad), std::invalid_argument);
  std::istringstream garbage("not json");
  EXPECT_THROW(read_json(garbage), std::invalid_argument);
  std::ostringstream out;
  EXPECT_THROW(write_report({}, "xml", out), std::invalid_argument);
  EXPECT_NO_THROW(write_report({}, "text", out));
}
