#include "ocbounds/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace ocb {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::size_t column_index(std::string_view column) {
  for (std::size_t i = 0; i < csv_columns.size(); ++i)
    if (csv_columns[i] == column) return i;
  for (std::size_t i = 0; i < json_extra_columns.size(); ++i)
    if (json_extra_columns[i] == column) return csv_columns.size() + i;
  throw std::out_of_range("unknown report column '" + std::string(column) + "'");
}

std::string_view column_name(std::size_t i) {
  return i < csv_columns.size() ? csv_columns[i] : json_extra_columns[i - csv_columns.size()];
}

double or_nan(const std::optional<double>& x) { return x ? *x : nan; }

} // namespace

double ReportRow::get(std::string_view column) const { return values[column_index(column)]; }
void ReportRow::set(std::string_view column, double value) { values[column_index(column)] = value; }

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double round_significant(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(format_number(x));
}

ReportRow to_row(const GridReport& r) {
  const BoundsReport& b = r.bounds;
  const MinorantTerms& c = b.components;
  ReportRow row;
  row.set("grid", r.grid);
  row.set("J_minus", b.j_minus);
  row.set("J_plus", b.j_plus);
  row.set("I_plus", or_nan(b.i_plus));
  row.set("I_minus", or_nan(b.i_minus));
  row.set("I_two_sided", or_nan(b.i_two_sided));
  row.set("I_M1", or_nan(b.i_m1));
  row.set("R1_eta", c.r1_eta);
  row.set("R1_zeta", c.r1_zeta);
  row.set("R2_eta", c.r2_eta);
  row.set("R2_zeta", c.r2_zeta);
  row.set("R3_eta", c.r3_eta);
  row.set("R3_zeta", c.r3_zeta);
  row.set("R4", c.r4);
  row.set("R5", c.r5);
  row.set("alpha", b.params.alpha);
  row.set("beta", b.params.beta);
  row.set("minres_iters", r.minres_iterations);
  row.set("wall_seconds", r.wall_seconds);
  row.set("M_plus", b.m_plus);
  row.set("M_plus_1", b.m_plus_1);
  row.set("active_set_iters", r.active_set_iterations);
  for (double& v : row.values) v = round_significant(v);
  return row;
}

std::vector<ReportRow> to_rows(const std::vector<GridReport>& reports) {
  std::vector<ReportRow> rows;
  rows.reserve(reports.size());
  for (const auto& r : reports) rows.push_back(to_row(r));
  return rows;
}

void write_csv(const std::vector<ReportRow>& rows, std::ostream& out) {
  for (std::size_t i = 0; i < csv_columns.size(); ++i) out << (i ? "," : "") << csv_columns[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < csv_columns.size(); ++i) out << (i ? "," : "") << format_number(row.values[i]);
    out << '\n';
  }
}

void write_json(const std::vector<ReportRow>& rows, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.values.size(); ++i) {
      const std::string key(column_name(i));
      if (std::isnan(row.values[i])) obj[key] = nullptr;
      else obj[key] = round_significant(row.values[i]);
    }
    doc["rows"].push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

void write_text(const std::vector<ReportRow>& rows, std::ostream& out) {
  static constexpr std::array<std::string_view, 15> shown{"grid",   "J_minus", "J_plus",  "I_plus", "I_minus",
                                                          "I_two_sided", "I_M1", "R1_eta", "R1_zeta", "R2_eta",
                                                          "R2_zeta", "R3_eta", "R3_zeta", "R4",     "R5"};
  std::vector<std::vector<std::string>> cells;
  cells.emplace_back(shown.begin(), shown.end());
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (auto c : shown) {
      const double v = row.get(c);
      if (c == "grid") {
        line.push_back(format_number(v));
      } else if (std::isnan(v)) {
        line.push_back("-");
      } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        line.push_back(std::string(buf) == "-0.000" ? "0.000" : buf);
      }
    }
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(shown.size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << "  ";
      out << std::string(width[i] - line[i].size(), ' ') << line[i];
    }
    out << '\n';
  }
}

void write_report(const std::vector<ReportRow>& rows, const std::string& format, std::ostream& out) {
  if (format == "csv") write_csv(rows, out);
  else if (format == "json") write_json(rows, out);
  else if (format == "text") write_text(rows, out);
  else throw std::invalid_argument("unknown format '" + format + "'");
}

std::vector<ReportRow> read_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
    throw std::invalid_argument("malformed report: missing rows array");
  std::vector<ReportRow> rows;
  for (const auto& obj : doc["rows"]) {
    if (!obj.is_object()) throw std::invalid_argument("malformed report: row is not an object");
    ReportRow row;
    row.values.fill(nan);
    for (const auto& [key, value] : obj.items()) {
      std::size_t i = 0;
      try {
        i = column_index(key);
      } catch (const std::out_of_range&) {
        continue;
      }
      if (value.is_number()) row.values[i] = value.get<double>();
      else if (!value.is_null()) throw std::invalid_argument("malformed report: non-numeric " + key);
    }
    rows.push_back(row);
  }
  return rows;
}

} // namespace ocb
