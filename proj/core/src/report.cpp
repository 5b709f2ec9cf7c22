#include "straus/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

namespace straus {
namespace {

ScanReport exhaustive_scan(u64 hi, const char* op) {
  if (hi < 2) throw DomainError(std::string(op) + ": hi must be at least 2");
  return scan_primes(2, hi, ScanMode::Exhaustive);
}

void require_exhaustive(const ScanReport& r, const char* op) {
  if (r.mode != ScanMode::Exhaustive) throw DomainError(std::string(op) + ": needs an exhaustive scan report");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Smallest step from {1, 2, 5} * 10^j giving at most `max_ticks` ticks over [0, span].
u64 tick_step(u64 span, u64 max_ticks) {
  u64 magnitude = 1;
  for (;;) {
    for (u64 mult : {1, 2, 5}) {
      const u64 step = mult * magnitude;
      if (span / step <= max_ticks) return step;
    }
    magnitude *= 10;
  }
}

}  // namespace

std::vector<KTableRow> k_table(const ScanReport& exhaustive, SolutionType type) {
  require_exhaustive(exhaustive, "k_table");
  std::vector<KTableRow> rows;
  rows.reserve(exhaustive.records.size());
  for (const ScanRecord& rec : exhaustive.records) {
    rows.push_back({rec.p, type == SolutionType::TypeI ? rec.type1_ks : rec.type2_ks});
  }
  return rows;
}

std::vector<KTableRow> k_table(u64 hi, SolutionType type) { return k_table(exhaustive_scan(hi, "k_table"), type); }

std::vector<FigurePoint> figure_points(const ScanReport& exhaustive) {
  require_exhaustive(exhaustive, "figure_points");
  std::vector<FigurePoint> points;
  for (const ScanRecord& rec : exhaustive.records) {
    const u64 lo = ceil_div(rec.p, 4);
    std::set<u64> ks(rec.type1_ks.begin(), rec.type1_ks.end());
    ks.insert(rec.type2_ks.begin(), rec.type2_ks.end());
    for (u64 k : ks) points.push_back({rec.p, lo + k});
  }
  return points;
}

std::vector<FigurePoint> figure_points(u64 hi) { return figure_points(exhaustive_scan(hi, "figure_points")); }

std::string k_table_csv(const std::vector<KTableRow>& rows) {
  std::string out;
  for (const KTableRow& row : rows) {
    out += std::to_string(row.p);
    for (u64 k : row.ks) {
      out += ',';
      out += std::to_string(k);
    }
    out += '\n';
  }
  return out;
}

std::string k_table_json(const std::vector<KTableRow>& rows) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const KTableRow& row : rows) j[std::to_string(row.p)] = row.ks;
  return j.dump(2) + "\n";
}

std::vector<KTableRow> parse_k_table_csv(const std::string& text) {
  std::vector<KTableRow> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream cells(line);
    std::string cell;
    KTableRow row;
    bool first = true;
    while (std::getline(cells, cell, ',')) {
      const u128 v = parse_u128(cell);
      if (first) {
        row.p = to_u64_checked(v);
        first = false;
      } else {
        if (!row.ks.empty() && row.ks.back() >= v) throw DomainError("k table row not strictly increasing: " + line);
        row.ks.push_back(to_u64_checked(v));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string figure_points_csv(const std::vector<FigurePoint>& points) {
  std::string out = "p,x\n";
  for (const FigurePoint& pt : points) out += std::to_string(pt.p) + "," + std::to_string(pt.x) + "\n";
  return out;
}

std::string render_scatter(const std::vector<FigurePoint>& points) {
  if (points.empty()) throw DomainError("render_scatter: no points");

  constexpr double kWidth = 800, kHeight = 500;
  constexpr double kLeft = 70, kRight = 30, kTop = 40, kBottom = 60;
  constexpr double kPlotW = kWidth - kLeft - kRight, kPlotH = kHeight - kTop - kBottom;

  u64 max_p = 0, max_x = 0;
  for (const FigurePoint& pt : points) {
    max_p = std::max(max_p, pt.p);
    max_x = std::max(max_x, pt.x);
  }
  const u64 p_step = tick_step(max_p, 10), x_step = tick_step(max_x, 8);
  const u64 p_axis = (max_p / p_step + 1) * p_step, x_axis = (max_x / x_step + 1) * x_step;
  auto sx = [&](u64 p) { return kLeft + kPlotW * static_cast<double>(p) / static_cast<double>(p_axis); };
  auto sy = [&](u64 x) { return kTop + kPlotH - kPlotH * static_cast<double>(x) / static_cast<double>(x_axis); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << "Solution values x by prime p</text>\n";

  svg << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop + kPlotH) << "\" x2=\"" << fmt(kLeft + kPlotW)
      << "\" y2=\"" << fmt(kTop + kPlotH) << "\"/>\n"
      << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(kLeft) << "\" y2=\""
      << fmt(kTop + kPlotH) << "\"/>\n";
  for (u64 t = 0; t <= p_axis; t += p_step) {
    svg << "<line x1=\"" << fmt(sx(t)) << "\" y1=\"" << fmt(kTop + kPlotH) << "\" x2=\"" << fmt(sx(t)) << "\" y2=\""
        << fmt(kTop + kPlotH + 5) << "\"/>\n";
  }
  for (u64 t = 0; t <= x_axis; t += x_step) {
    svg << "<line x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(sy(t)) << "\" x2=\"" << fmt(kLeft) << "\" y2=\""
        << fmt(sy(t)) << "\"/>\n";
  }
  svg << "</g>\n<g>\n";
  for (u64 t = 0; t <= p_axis; t += p_step) {
    svg << "<text x=\"" << fmt(sx(t)) << "\" y=\"" << fmt(kTop + kPlotH + 20) << "\" text-anchor=\"middle\">" << t
        << "</text>\n";
  }
  for (u64 t = 0; t <= x_axis; t += x_step) {
    svg << "<text x=\"" << fmt(kLeft - 9) << "\" y=\"" << fmt(sy(t) + 4) << "\" text-anchor=\"end\">" << t
        << "</text>\n";
  }
  svg << "<text x=\"" << fmt(kLeft + kPlotW / 2) << "\" y=\"" << fmt(kHeight - 15)
      << "\" text-anchor=\"middle\">prime p</text>\n"
      << "<text x=\"18\" y=\"" << fmt(kTop + kPlotH / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << fmt(kTop + kPlotH / 2) << ")\">x</text>\n"
      << "</g>\n<g fill=\"steelblue\">\n";
  for (const FigurePoint& pt : points) {
    svg << "<circle class=\"point\" cx=\"" << fmt(sx(pt.p)) << "\" cy=\"" << fmt(sy(pt.x)) << "\" r=\"3\"><title>p="
        << pt.p << ", x=" << pt.x << "</title></circle>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace straus
