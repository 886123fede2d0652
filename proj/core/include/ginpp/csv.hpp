#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "ginpp/geometry.hpp"
#include "ginpp/pattern.hpp"
#include "ginpp/summaries.hpp"

namespace ginpp {

/// Reads one CSV record (comma-separated, double-quote quoting, quoted fields
/// may contain commas and doubled quotes). Returns false at end of input.
bool read_csv_row(std::istream& in, std::vector<std::string>& fields);

/// Points file: header `x_m,y_m`, one point per row, 6 decimal places.
void write_points_csv(std::ostream& out, std::span<const Point> points);
std::vector<Point> read_points_csv(std::istream& in);

/// Summary file: columns r_m,f_hat,g_hat,j_hat,n_valid_f,n_valid_g;
/// undefined values are empty fields.
void write_summary_csv(std::ostream& out, const SummaryEstimate& s);
SummaryEstimate read_summary_csv(std::istream& in);

/// Window polygon file: `lon lat` per line, '#' comments and blank lines
/// ignored.
std::vector<LonLat> read_window_geo(std::istream& in);

}  // namespace ginpp
