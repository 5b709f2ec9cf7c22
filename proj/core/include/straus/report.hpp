#pragma once

#include <string>
#include <utility>
#include <vector>

#include "straus/scan.hpp"

namespace straus {

/// All offsets k = x - ceil(p/4) at which p has a witness of one type.
struct KTableRow {
  u64 p = 0;
  std::vector<u64> ks;  // strictly increasing, possibly empty

  friend bool operator==(const KTableRow&, const KTableRow&) = default;
};

struct FigurePoint {
  u64 p = 0;
  u64 x = 0;

  friend bool operator==(const FigurePoint&, const FigurePoint&) = default;
  friend auto operator<=>(const FigurePoint&, const FigurePoint&) = default;
};

/// One row per prime <= hi. Throws DomainError for hi < 2.
std::vector<KTableRow> k_table(u64 hi, SolutionType type);
std::vector<KTableRow> k_table(const ScanReport& exhaustive, SolutionType type);

/// (p, x) for every x admitting a witness of either type, sorted.
std::vector<FigurePoint> figure_points(u64 hi);
std::vector<FigurePoint> figure_points(const ScanReport& exhaustive);

/// Ragged CSV, no header: "p,k1,k2,...". A row with no ks is just "p".
std::string k_table_csv(const std::vector<KTableRow>& rows);
/// {"p": [ks], ...} in ascending p.
std::string k_table_json(const std::vector<KTableRow>& rows);
/// Parses k_table_csv output. Throws DomainError on malformed input.
std::vector<KTableRow> parse_k_table_csv(const std::string& text);

/// "p,x" header followed by one line per point.
std::string figure_points_csv(const std::vector<FigurePoint>& points);

/// Standalone SVG scatter (p horizontal, x vertical). Byte-deterministic.
/// Throws DomainError on an empty point list.
std::string render_scatter(const std::vector<FigurePoint>& points);

}  // namespace straus
