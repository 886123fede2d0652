#include "ginpp/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ginpp/csv.hpp"

namespace ginpp {

namespace {

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return s;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

/// Parses a decimal degree field; a decimal comma is tolerated and normalized.
bool parse_degree(const std::string& raw, double& out) {
  std::string s = trim(raw);
  std::replace(s.begin(), s.end(), ',', '.');
  if (s.empty()) return false;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

/// Union-find for single-linkage clustering.
struct DisjointSet {
  std::vector<std::size_t> parent;
  explicit DisjointSet(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::size_t IngestReport::rows_rejected() const {
  std::size_t n = 0;
  for (const auto& [reason, count] : rejected_by_reason) n += count;
  return n;
}

bool IngestReport::accounting_identity_holds() const {
  return rows_read == points_retained + rows_rejected() + rows_filtered +
                          duplicates_merged + points_outside_window;
}

ParsedSites parse_sites(std::istream& in, const ColumnMapping& mapping) {
  ParsedSites out;
  std::vector<std::string> header;
  if (!read_csv_row(in, header)) {
    throw std::runtime_error("parse_sites: input has no header row");
  }

  auto find_col = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (trim(header[i]) == name) return i;
    }
    std::string available;
    for (std::size_t i = 0; i < header.size(); ++i) {
      available += (i ? ", " : "") + trim(header[i]);
    }
    throw std::runtime_error("parse_sites: mapped column '" + name +
                             "' not found in header; available columns: " +
                             available);
  };
  const std::size_t op_idx = find_col(mapping.operator_col);
  const std::size_t band_idx = find_col(mapping.band_col);
  const std::size_t lon_idx = find_col(mapping.lon_col);
  const std::size_t lat_idx = find_col(mapping.lat_col);
  const std::size_t need =
      1 + std::max(std::max(op_idx, band_idx), std::max(lon_idx, lat_idx));

  std::vector<std::string> row;
  while (read_csv_row(in, row)) {
    ++out.report.rows_read;
    auto reject = [&](const std::string& reason) {
      ++out.report.rejected_by_reason[reason];
    };
    if (row.size() < need) {
      reject("missing columns");
      continue;
    }
    SiteRecord rec;
    rec.operator_label = trim(row[op_idx]);
    rec.band = trim(row[band_idx]);
    if (rec.operator_label.empty()) {
      reject("empty operator");
      continue;
    }
    if (rec.band.empty()) {
      reject("empty band");
      continue;
    }
    if (!parse_degree(row[lon_idx], rec.lon)) {
      reject("bad longitude");
      continue;
    }
    if (!parse_degree(row[lat_idx], rec.lat)) {
      reject("bad latitude");
      continue;
    }
    if (std::abs(rec.lon) > 180.0) {
      reject("longitude out of range");
      continue;
    }
    if (std::abs(rec.lat) > 90.0) {
      reject("latitude out of range");
      continue;
    }
    out.records.push_back(std::move(rec));
  }
  out.report.points_retained = out.records.size();
  return out;
}

std::vector<SiteRecord> filter_sites(std::span<const SiteRecord> records,
                                     const std::optional<std::string>& op,
                                     const std::optional<std::string>& band) {
  const std::optional<std::string> op_l =
      op ? std::optional<std::string>(to_lower(*op)) : std::nullopt;
  const std::optional<std::string> band_l =
      band ? std::optional<std::string>(to_lower(*band)) : std::nullopt;
  std::vector<SiteRecord> out;
  for (const auto& r : records) {
    if (op_l && to_lower(r.operator_label) != *op_l) continue;
    if (band_l && to_lower(r.band) != *band_l) continue;
    out.push_back(r);
  }
  return out;
}

Window project_window(const std::vector<LonLat>& window_geo, ProjectionRef& ref_out) {
  if (window_geo.size() < 3) {
    throw std::invalid_argument("window polygon needs at least 3 vertices");
  }
  // Centroid of the lon/lat polygon (planar formula; fine at city scale).
  std::vector<Point> as_planar;
  as_planar.reserve(window_geo.size());
  for (const auto& v : window_geo) as_planar.push_back({v.lon, v.lat});
  const Window planar = Window::polygon(as_planar);
  const Point ctr = planar.centroid();
  ref_out = ProjectionRef{ctr.x, ctr.y};

  std::vector<Point> projected;
  projected.reserve(window_geo.size());
  for (const auto& v : window_geo) {
    projected.push_back(project(v.lon, v.lat, ref_out));
  }
  return Window::polygon(std::move(projected));
}

PatternResult to_pattern(std::span<const SiteRecord> records,
                         const std::vector<LonLat>& window_geo, double dedup_eps) {
  if (!(dedup_eps >= 0.0)) {
    throw std::invalid_argument("to_pattern: dedup_eps must be >= 0");
  }
  ProjectionRef ref;
  Window win = project_window(window_geo, ref);
  PatternResult out{PointPattern{{}, std::move(win)}, IngestReport{}, ref};
  out.report.rows_read = records.size();

  std::vector<Point> pts;
  pts.reserve(records.size());
  for (const auto& r : records) pts.push_back(project(r.lon, r.lat, out.ref));

  // Single-linkage clusters of pairwise distance <= eps, merged to centroids.
  DisjointSet ds(pts.size());
  if (dedup_eps > 0.0) {
    const double eps2 = dedup_eps * dedup_eps;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (squared_distance(pts[i], pts[j]) <= eps2) ds.unite(i, j);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> clusters;  // root -> members
  for (std::size_t i = 0; i < pts.size(); ++i) {
    clusters[ds.find(i)].push_back(i);
  }
  // Order clusters by smallest member index for determinism.
  std::vector<std::pair<std::size_t, const std::vector<std::size_t>*>> ordered;
  ordered.reserve(clusters.size());
  for (const auto& [root, members] : clusters) {
    ordered.emplace_back(*std::min_element(members.begin(), members.end()),
                         &members);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  for (const auto& [first_idx, members] : ordered) {
    Point centroid{0.0, 0.0};
    for (std::size_t idx : *members) {
      centroid.x += pts[idx].x;
      centroid.y += pts[idx].y;
    }
    centroid.x /= static_cast<double>(members->size());
    centroid.y /= static_cast<double>(members->size());
    out.report.duplicates_merged += members->size() - 1;
    if (out.pattern.window.contains(centroid)) {
      out.pattern.points.push_back(centroid);
    } else {
      ++out.report.points_outside_window;
    }
  }
  out.report.points_retained = out.pattern.points.size();
  if (out.pattern.points.empty() && !records.empty()) {
    throw std::runtime_error(
        "to_pattern: no points retained (all " + std::to_string(records.size()) +
        " records merged away or outside the window polygon)");
  }
  return out;
}

IngestReport merge_reports(const IngestReport& parse_stage, std::size_t filtered_out,
                           const IngestReport& pattern_stage) {
  IngestReport out;
  out.rows_read = parse_stage.rows_read;
  out.rejected_by_reason = parse_stage.rejected_by_reason;
  out.rows_filtered = filtered_out;
  out.duplicates_merged = pattern_stage.duplicates_merged;
  out.points_outside_window = pattern_stage.points_outside_window;
  out.points_retained = pattern_stage.points_retained;
  return out;
}

}  // namespace ginpp
