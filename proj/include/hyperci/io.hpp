#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperci/dismantle.hpp"
#include "hyperci/hypergraph.hpp"

namespace hyperci {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kTrajectoryFormatVersion = 1;

struct ParseWarning {
  std::size_t line = 0;
  std::string message;

  friend bool operator==(const ParseWarning&, const ParseWarning&) = default;
};

/// Hyperedge list as read from text; `edges[i].line` is its 1-based line.
struct HyperedgeListDocument {
  std::string source;
  std::vector<LabeledEdge> edges;
  std::vector<ParseWarning> warnings;
};

/// One hyperedge per line, labels separated by commas and/or whitespace, `#`
/// comments to end of line. Blank and comment-only lines are skipped.
/// Throws Error naming the line when a non-blank line yields no label.
HyperedgeListDocument parse_hyperedge_list(std::string_view text, std::string source = {});
HyperedgeListDocument read_hyperedge_list(const std::string& path);
std::string write_hyperedge_list(const HyperedgeListDocument& doc);

Hypergraph build(const HyperedgeListDocument& doc);

inline constexpr std::string_view kTrajectoryCsvHeader =
    "batch,removed_nodes,frac_removed,sigma_remaining,sigma_original,ratio";

std::string write_trajectory_csv(const Trajectory& t);

/// Fixed key order; reals rounded to 6 decimals so the JSON and CSV views of
/// a trajectory agree.
std::string write_trajectory_json(const Trajectory& t);
/// Throws Error naming the first missing or mistyped key.
Trajectory read_trajectory_json(std::string_view text);

struct CurvePoint {
  double x = 0.0;
  double y = 0.0;
};

struct Curve {
  std::string label;
  std::vector<CurvePoint> points;
};

/// (frac_removed, ratio) for each batch, preceded by the (0, 1) origin.
Curve anc_curve(const Trajectory& t, std::string label);

/// Line chart of normalized connectivity against removed fraction. Each
/// polyline carries its raw data in a `data-points` attribute at 6 decimals.
std::string render_anc_svg(const std::vector<Curve>& curves, std::string_view title = {});

/// Fixed-point with 6 decimals, the format every report uses.
std::string format_real(double value);

}  // namespace hyperci
