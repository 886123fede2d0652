#include "ginpp/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ginpp {

namespace {

double parse_field_double(const std::string& s, const char* what, std::size_t line) {
  double v{};
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::runtime_error(std::string("bad ") + what + " value '" + s +
                             "' at line " + std::to_string(line));
  }
  return v;
}

std::size_t parse_field_size(const std::string& s, const char* what,
                             std::size_t line) {
  std::size_t v{};
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::runtime_error(std::string("bad ") + what + " value '" + s +
                             "' at line " + std::to_string(line));
  }
  return v;
}

void append_double(std::string& out, const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  out += buf;
}

}  // namespace

bool read_csv_row(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  std::string line;
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::string field;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (in_quotes) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      in_quotes = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += ch;
    }
  }
  fields.push_back(std::move(field));
  return true;
}

void write_points_csv(std::ostream& out, std::span<const Point> points) {
  std::string buf = "x_m,y_m\n";
  for (const auto& p : points) {
    append_double(buf, "%.6f", p.x);
    buf += ',';
    append_double(buf, "%.6f", p.y);
    buf += '\n';
  }
  out << buf;
}

std::vector<Point> read_points_csv(std::istream& in) {
  std::vector<std::string> row;
  if (!read_csv_row(in, row) || row.size() < 2) {
    throw std::runtime_error("points CSV: missing x_m,y_m header");
  }
  std::vector<Point> pts;
  std::size_t line = 1;
  while (read_csv_row(in, row)) {
    ++line;
    if (row.size() == 1 && row[0].empty()) continue;  // trailing blank line
    if (row.size() < 2) {
      throw std::runtime_error("points CSV: expected 2 columns at line " +
                               std::to_string(line));
    }
    pts.push_back({parse_field_double(row[0], "x_m", line),
                   parse_field_double(row[1], "y_m", line)});
  }
  return pts;
}

void write_summary_csv(std::ostream& out, const SummaryEstimate& s) {
  std::string buf = "r_m,f_hat,g_hat,j_hat,n_valid_f,n_valid_g\n";
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    append_double(buf, "%.10g", s.grid.r_values[i]);
    buf += ',';
    if (is_defined(s.f_hat[i])) append_double(buf, "%.10g", s.f_hat[i]);
    buf += ',';
    if (is_defined(s.g_hat[i])) append_double(buf, "%.10g", s.g_hat[i]);
    buf += ',';
    if (is_defined(s.j_hat[i])) append_double(buf, "%.10g", s.j_hat[i]);
    buf += ',';
    buf += std::to_string(s.n_valid_f[i]);
    buf += ',';
    buf += std::to_string(s.n_valid_g[i]);
    buf += '\n';
  }
  out << buf;
}

SummaryEstimate read_summary_csv(std::istream& in) {
  std::vector<std::string> row;
  if (!read_csv_row(in, row) || row.size() < 6 || row[0] != "r_m") {
    throw std::runtime_error("summary CSV: missing r_m,... header");
  }
  SummaryEstimate s;
  std::size_t line = 1;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  while (read_csv_row(in, row)) {
    ++line;
    if (row.size() == 1 && row[0].empty()) continue;
    if (row.size() < 6) {
      throw std::runtime_error("summary CSV: expected 6 columns at line " +
                               std::to_string(line));
    }
    s.grid.r_values.push_back(parse_field_double(row[0], "r_m", line));
    s.f_hat.push_back(row[1].empty() ? nan
                                     : parse_field_double(row[1], "f_hat", line));
    s.g_hat.push_back(row[2].empty() ? nan
                                     : parse_field_double(row[2], "g_hat", line));
    s.j_hat.push_back(row[3].empty() ? nan
                                     : parse_field_double(row[3], "j_hat", line));
    s.n_valid_f.push_back(parse_field_size(row[4], "n_valid_f", line));
    s.n_valid_g.push_back(parse_field_size(row[5], "n_valid_g", line));
  }
  if (s.grid.r_values.empty()) {
    throw std::runtime_error("summary CSV: no data rows");
  }
  return s;
}

std::vector<LonLat> read_window_geo(std::istream& in) {
  std::vector<LonLat> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    double lon, lat;
    if (!(ls >> lon)) continue;  // blank or comment-only line
    if (!(ls >> lat)) {
      throw std::runtime_error("window polygon: expected 'lon lat' at line " +
                               std::to_string(lineno));
    }
    out.push_back({lon, lat});
  }
  if (out.size() < 3) {
    throw std::runtime_error("window polygon: needs at least 3 vertices");
  }
  return out;
}

}  // namespace ginpp
