#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trilab/lab/report.hpp"

namespace trilab::lab {

enum class PlotKind { kRatioVsCard, kRatioVsP, kAll };

PlotKind parse_plot_kind(std::string_view name);

/// Scatter chart of ratio against x, one series per bound name, as SVG.
/// Rows without a ratio are skipped; no rows gives empty axes.
std::string render_svg(const std::vector<ReportRow>& rows, PlotKind kind);

/// Reads the CSV report and writes <prefix>-ratio-vs-card.svg and/or
/// <prefix>-ratio-vs-p.svg. Returns the written paths. Throws kMissingReport.
std::vector<std::string> plot(const std::string& report_path, PlotKind kind,
                              const std::string& prefix);

}  // namespace trilab::lab
