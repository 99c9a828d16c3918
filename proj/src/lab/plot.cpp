#include "trilab/lab/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "trilab/error.hpp"

namespace trilab::lab {
namespace {

constexpr double kWidth = 720, kHeight = 480;
constexpr double kLeft = 70, kRight = 190, kTop = 30, kBottom = 50;

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

double max_card(const std::string& cards) {
  double best = 0;
  std::stringstream ss(cards);
  std::string tok;
  while (std::getline(ss, tok, 'x')) {
    if (!tok.empty()) best = std::max(best, std::stod(tok));
  }
  return best;
}

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Point {
  double x, y;
};

}  // namespace

PlotKind parse_plot_kind(std::string_view name) {
  if (name == "ratio-vs-card") return PlotKind::kRatioVsCard;
  if (name == "ratio-vs-p") return PlotKind::kRatioVsP;
  if (name == "all") return PlotKind::kAll;
  throw Error(ErrorCode::kConfigError, "unknown plot kind '" + std::string(name) + "'");
}

std::string render_svg(const std::vector<ReportRow>& rows, PlotKind kind) {
  std::map<std::string, std::vector<Point>> series;
  for (const auto& r : rows) {
    if (r.bound.empty() || !r.ratio || !std::isfinite(*r.ratio)) continue;
    const double x = kind == PlotKind::kRatioVsP ? static_cast<double>(r.p) : max_card(r.cards);
    series[r.bound].push_back({x, *r.ratio});
  }
  bool any = false, all_positive = true;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  for (const auto& [name, pts] : series) {
    for (const auto& pt : pts) {
      if (!any) {
        x0 = x1 = pt.x;
        y0 = y1 = pt.y;
        any = true;
      }
      x0 = std::min(x0, pt.x);
      x1 = std::max(x1, pt.x);
      y0 = std::min(y0, pt.y);
      y1 = std::max(y1, pt.y);
      if (pt.y <= 0) all_positive = false;
    }
  }
  const bool log_y = any && all_positive;
  auto ty = [&](double y) { return log_y ? std::log10(y) : y; };
  double ly0 = any ? ty(y0) : 0, ly1 = any ? ty(y1) : 1;
  if (ly1 - ly0 < 1e-12) {
    ly0 -= 0.5;
    ly1 += 0.5;
  }
  if (x1 - x0 < 1e-12) {
    x0 -= 1;
    x1 += 1;
  }
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto sy = [&](double y) { return kTop + ph - (ty(y) - ly0) / (ly1 - ly0) * ph; };

  std::ostringstream o;
  const char* xlabel = kind == PlotKind::kRatioVsP ? "p" : "max cardinality";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + ph << "\" x2=\"" << kLeft + pw << "\" y2=\""
    << kTop + ph << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + ph
    << "\" stroke=\"black\"/>\n";
  o << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 12 << "\" text-anchor=\"middle\">"
    << xlabel << "</text>\n";
  o << "<text x=\"16\" y=\"" << kTop + ph / 2 << "\" transform=\"rotate(-90 16 " << kTop + ph / 2
    << ")\" text-anchor=\"middle\">" << (log_y ? "ratio (log10)" : "ratio") << "</text>\n";
  if (any) {
    for (int i = 0; i <= 4; ++i) {
      const double fx = x0 + (x1 - x0) * i / 4, fy = ly0 + (ly1 - ly0) * i / 4;
      const double px = kLeft + pw * i / 4, py = kTop + ph - ph * i / 4;
      o << "<text x=\"" << px << "\" y=\"" << kTop + ph + 16 << "\" text-anchor=\"middle\">"
        << num(fx) << "</text>\n";
      o << "<text x=\"" << kLeft - 6 << "\" y=\"" << py + 4 << "\" text-anchor=\"end\">"
        << num(log_y ? std::pow(10.0, fy) : fy) << "</text>\n";
    }
  }
  std::size_t idx = 0;
  for (const auto& [name, pts] : series) {
    const char* color = kPalette[idx % std::size(kPalette)];
    o << "<g class=\"series\" data-bound=\"" << esc(name) << "\" fill=\"" << color << "\">\n";
    for (const auto& pt : pts) {
      o << "<circle cx=\"" << num(sx(pt.x)) << "\" cy=\"" << num(sy(pt.y)) << "\" r=\"3\"/>\n";
    }
    o << "</g>\n";
    const double ly = kTop + 14.0 * static_cast<double>(idx);
    o << "<rect x=\"" << kLeft + pw + 14 << "\" y=\"" << ly << "\" width=\"8\" height=\"8\" fill=\""
      << color << "\"/><text x=\"" << kLeft + pw + 26 << "\" y=\"" << ly + 8 << "\">" << esc(name)
      << "</text>\n";
    ++idx;
  }
  o << "</svg>\n";
  return o.str();
}

std::vector<std::string> plot(const std::string& report_path, PlotKind kind,
                              const std::string& prefix) {
  const auto rows = read_csv(report_path);
  std::vector<std::string> written;
  auto emit = [&](PlotKind k, const char* suffix) {
    const std::string path = prefix + suffix;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::kConfigError, "cannot write " + path);
    f << render_svg(rows, k);
    written.push_back(path);
  };
  if (kind != PlotKind::kRatioVsP) emit(PlotKind::kRatioVsCard, "-ratio-vs-card.svg");
  if (kind != PlotKind::kRatioVsCard) emit(PlotKind::kRatioVsP, "-ratio-vs-p.svg");
  return written;
}

}  // namespace trilab::lab
