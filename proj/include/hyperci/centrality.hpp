#pragma once

#include <string>
#include <vector>

#include "hyperci/hypergraph.hpp"

namespace hyperci {

enum class Measure { hd, hhd, ci, hyper_ci };

std::string to_string(Measure m);

/// One score per live node of the hypergraph it was computed on.
struct CentralityScores {
  Measure measure = Measure::hhd;
  int radius = 0;  // 0 for hd/hhd
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double operator[](NodeId v) const { return values.at(v); }
};

/// score(v) = HHD(v).
CentralityScores score_hhd(const Hypergraph& h);

/// score(v) = number of distinct neighbors in the clique expansion.
CentralityScores score_hd(const Hypergraph& h);

/// score(v) = (HHD(v) - 1) * sum of HHD(u) over nodes u at distance exactly
/// `radius` from v in the projection.
CentralityScores score_hyper_ci(const Hypergraph& h, int radius);

/// Classic collective influence on the projection:
/// (k_v - 1) * sum of (k_u - 1) over the radius-boundary, k = distinct degree.
CentralityScores score_ci(const Hypergraph& h, int radius);

CentralityScores score(const Hypergraph& h, Measure m, int radius);

/// Node ids by descending score, ties by ascending id.
std::vector<NodeId> rank(const CentralityScores& scores);

}  // namespace hyperci
