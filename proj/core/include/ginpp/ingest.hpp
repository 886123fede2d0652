#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ginpp/geometry.hpp"
#include "ginpp/pattern.hpp"

namespace ginpp {

/// One base-station row from a deployment CSV.
struct SiteRecord {
  std::string operator_label;
  std::string band;
  double lon{0.0};
  double lat{0.0};
};

/// Maps the four required logical columns onto CSV header names.
struct ColumnMapping {
  std::string operator_col{"operator"};
  std::string band_col{"band"};
  std::string lon_col{"lon"};
  std::string lat_col{"lat"};
};

/// Row accounting across the ingestion pipeline. The identity
///   rows_read = retained + rejected + filtered + merged + outside
/// holds for a full parse -> filter -> to_pattern run (merge() composes the
/// per-stage reports).
struct IngestReport {
  std::size_t rows_read{0};
  std::size_t points_retained{0};
  std::size_t duplicates_merged{0};
  std::size_t points_outside_window{0};
  std::size_t rows_filtered{0};
  std::map<std::string, std::size_t> rejected_by_reason;

  std::size_t rows_rejected() const;
  bool accounting_identity_holds() const;
};

struct ParsedSites {
  std::vector<SiteRecord> records;
  IngestReport report;
};

/// Streaming CSV parse. Malformed rows are rejected (never abort) with
/// per-reason counts; decimal commas in lon/lat are normalized. A mapped
/// column missing from the header is a hard error listing available columns.
ParsedSites parse_sites(std::istream& in, const ColumnMapping& mapping);

/// Case-insensitive exact label match; both keys optional.
std::vector<SiteRecord> filter_sites(std::span<const SiteRecord> records,
                                     const std::optional<std::string>& op,
                                     const std::optional<std::string>& band);

struct PatternResult {
  PointPattern pattern;
  IngestReport report;
  ProjectionRef ref;
};

/// Projects records about the window centroid, merges single-linkage clusters
/// of pairwise distance <= dedup_eps to their centroids, clips to the window.
/// Throws std::runtime_error when nothing is retained.
PatternResult to_pattern(std::span<const SiteRecord> records,
                         const std::vector<LonLat>& window_geo,
                         double dedup_eps = 1.0);

/// Window polygon (lon/lat) -> projected meters Window about its centroid.
Window project_window(const std::vector<LonLat>& window_geo, ProjectionRef& ref_out);

/// Pipeline report: parse counts + filter drop + pattern-stage counts.
IngestReport merge_reports(const IngestReport& parse_stage, std::size_t filtered_out,
                           const IngestReport& pattern_stage);

}  // namespace ginpp
