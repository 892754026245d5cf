#pragma once

/// \file report.hpp
/// \brief CSV, JSON and plain text tables of experiment results.
///
/// Every number is rounded to 6 significant digits before it is written, so
/// CSV and JSON carry identical values and a JSON round trip is exact.
/// Unavailable values are NaN; they print as "nan" (CSV, text) or null (JSON).

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ocbounds/experiment.hpp"

namespace ocb {

inline constexpr std::array<std::string_view, 19> csv_columns{
    "grid",   "J_minus", "J_plus", "I_plus", "I_minus", "I_two_sided", "I_M1",  "R1_eta",       "R1_zeta",     "R2_eta",
    "R2_zeta", "R3_eta", "R3_zeta", "R4",    "R5",      "alpha",       "beta",  "minres_iters", "wall_seconds"};

/// JSON carries these after the CSV columns.
inline constexpr std::array<std::string_view, 3> json_extra_columns{"M_plus", "M_plus_1", "active_set_iters"};

struct ReportRow {
  std::array<double, csv_columns.size() + json_extra_columns.size()> values{};

  /// Throws std::out_of_range for an unknown column.
  double get(std::string_view column) const;
  void set(std::string_view column, double value);
};

/// 6 significant digits, "nan" for NaN.
std::string format_number(double x);
/// x rounded to 6 significant digits (the value format_number prints).
double round_significant(double x);

ReportRow to_row(const GridReport& report);
std::vector<ReportRow> to_rows(const std::vector<GridReport>& reports);

void write_csv(const std::vector<ReportRow>& rows, std::ostream& out);
void write_json(const std::vector<ReportRow>& rows, std::ostream& out);
void write_text(const std::vector<ReportRow>& rows, std::ostream& out);
/// Dispatches on "csv", "json" or "text"; throws std::invalid_argument otherwise.
void write_report(const std::vector<ReportRow>& rows, const std::string& format, std::ostream& out);

/// Reads the output of write_json. Throws std::invalid_argument on malformed input.
std::vector<ReportRow> read_json(std::istream& in);

} // namespace ocb
