#include "hyperci/centrality.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include <fmt/format.h>

namespace hyperci {
namespace {

void require_nonempty(const Hypergraph& h) {
  if (h.empty()) throw Error("cannot score an empty hypergraph");
}

void require_radius(int radius) {
  if (radius < 1) throw Error(fmt::format("radius L must be >= 1, got {}", radius));
}

// Breadth-first layer expansion over a projection with buffers reused
// across sources.
class LayerScanner {
public:
  explicit LayerScanner(const Projection& adj) : adj_(adj), dist_(adj.size(), -1) {}

  template <class Visit>
  void boundary(NodeId source, int radius, Visit&& visit) {
    touched_.clear();
    frontier_.assign(1, source);
    mark(source, 0);
    for (int depth = 1; depth <= radius && !frontier_.empty(); ++depth) {
      next_.clear();
      for (NodeId x : frontier_) {
        for (const auto& [u, shared] : adj_.row(x)) {
          if (dist_[u] < 0) {
            mark(u, depth);
            next_.push_back(u);
          }
        }
      }
      frontier_.swap(next_);
    }
    for (NodeId u : frontier_) visit(u);
    for (NodeId u : touched_) dist_[u] = -1;
  }

private:
  void mark(NodeId v, int d) {
    dist_[v] = d;
    touched_.push_back(v);
  }

  const Projection& adj_;
  std::vector<int> dist_;
  std::vector<NodeId> touched_;
  std::vector<NodeId> frontier_;
  std::vector<NodeId> next_;
};

// (own[v] - 1) * sum over the boundary of weight[u], with own[v] <= 1 scoring 0.
CentralityScores boundary_product(const Projection& adj, const std::vector<std::int64_t>& own,
                                  const std::vector<std::int64_t>& weight, int radius) {
  CentralityScores out;
  out.radius = radius;
  out.values.assign(adj.size(), 0.0);
  LayerScanner scanner(adj);
  for (NodeId v = 0; v < adj.size(); ++v) {
    if (own[v] <= 1) continue;
    std::int64_t sum = 0;
    scanner.boundary(v, radius, [&](NodeId u) { sum += weight[u]; });
    out.values[v] = static_cast<double>((own[v] - 1) * sum);
  }
  return out;
}

}  // namespace

std::string to_string(Measure m) {
  switch (m) {
    case Measure::hd: return "hd";
    case Measure::hhd: return "hhd";
    case Measure::ci: return "ci";
    case Measure::hyper_ci: return "hyperci";
  }
  return "?";
}

CentralityScores score_hhd(const Hypergraph& h) {
  require_nonempty(h);
  CentralityScores out{Measure::hhd, 0, {}};
  out.values.resize(h.node_count());
  for (NodeId v = 0; v < h.node_count(); ++v) out.values[v] = static_cast<double>(h.hhd(v));
  return out;
}

CentralityScores score_hd(const Hypergraph& h) {
  require_nonempty(h);
  const auto adj = h.project_adjacency();
  CentralityScores out{Measure::hd, 0, {}};
  out.values.resize(h.node_count());
  for (NodeId v = 0; v < h.node_count(); ++v) out.values[v] = static_cast<double>(adj.degree(v));
  return out;
}

CentralityScores score_hyper_ci(const Hypergraph& h, int radius) {
  require_radius(radius);
  require_nonempty(h);
  std::vector<std::int64_t> degree(h.node_count());
  for (NodeId v = 0; v < h.node_count(); ++v) degree[v] = static_cast<std::int64_t>(h.hhd(v));
  auto out = boundary_product(h.project_adjacency(), degree, degree, radius);
  out.measure = Measure::hyper_ci;
  return out;
}

CentralityScores score_ci(const Hypergraph& h, int radius) {
  require_radius(radius);
  require_nonempty(h);
  const auto adj = h.project_adjacency();
  std::vector<std::int64_t> k(h.node_count());
  std::vector<std::int64_t> excess(h.node_count());
  for (NodeId v = 0; v < h.node_count(); ++v) {
    k[v] = static_cast<std::int64_t>(adj.degree(v));
    excess[v] = std::max<std::int64_t>(k[v] - 1, 0);
  }
  auto out = boundary_product(adj, k, excess, radius);
  out.measure = Measure::ci;
  return out;
}

CentralityScores score(const Hypergraph& h, Measure m, int radius) {
  switch (m) {
    case Measure::hd: return score_hd(h);
    case Measure::hhd: return score_hhd(h);
    case Measure::ci: return score_ci(h, radius);
    case Measure::hyper_ci: return score_hyper_ci(h, radius);
  }
  throw Error("unknown measure");
}

std::vector<NodeId> rank(const CentralityScores& scores) {
  std::vector<NodeId> order(scores.values.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  const auto& s = scores.values;
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return s[a] > s[b]; });
  return order;
}

}  // namespace hyperci
