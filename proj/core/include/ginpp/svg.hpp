#pragma once

#include <optional>
#include <string>

#include "ginpp/model.hpp"
#include "ginpp/summaries.hpp"

namespace ginpp {

struct PlotOptions {
  std::optional<GinibreParams> theory;  // overlay of theoretical J
  int width{800};
  int height{520};
};

/// Self-contained deterministic SVG: the J_hat curve (split at undefined
/// gaps), an optional theoretical overlay, and the J = 1 reference line.
/// Byte-stable given identical input.
std::string render_j_plot_svg(const SummaryEstimate& s, const PlotOptions& options);

}  // namespace ginpp
