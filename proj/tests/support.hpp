#pragma once

#include <random>
#include <string>
#include <vector>

#include "hyperci/hyperci.hpp"

namespace hyperci::testing {

using EdgeList = std::vector<std::vector<std::string>>;

/// Seven-node hypergraph whose hyper-degrees and HyperCI_1 scores are
/// x0:1/0 x1:1/0 x2:3/16 x3:2/5 x4:1/0 x5:1/0 x6:2/7.
inline EdgeList fixture_edges() {
  return {{"x0", "x1", "x2"}, {"x2", "x3"}, {"x2", "x4", "x5", "x6"}, {"x3", "x6"}};
}

inline Hypergraph fixture() { return Hypergraph::build(fixture_edges()); }

inline NodeId id(const Hypergraph& h, const std::string& label) { return h.find(label).value(); }

inline std::vector<std::string> labels(const Hypergraph& h, const std::vector<NodeId>& ids) {
  std::vector<std::string> out;
  for (auto v : ids) out.push_back(h.label(v));
  return out;
}

struct RandomShape {
  int max_nodes = 30;
  int max_edges = 40;
  int min_edge_size = 1;
  int max_edge_size = 6;
};

/// Random hyperedge list over labels v0..v{n-1}; occasionally repeats an edge.
inline EdgeList random_edges(std::mt19937& rng, RandomShape shape = {}) {
  std::uniform_int_distribution<int> n_dist(2, shape.max_nodes);
  std::uniform_int_distribution<int> m_dist(1, shape.max_edges);
  const int n = n_dist(rng);
  const int m = m_dist(rng);
  std::uniform_int_distribution<int> size_dist(shape.min_edge_size,
                                               std::min(shape.max_edge_size, n));
  std::uniform_int_distribution<int> node_dist(0, n - 1);
  std::bernoulli_distribution repeat(0.05);
  EdgeList edges;
  for (int e = 0; e < m; ++e) {
    if (!edges.empty() && repeat(rng)) {
      edges.push_back(edges.back());
      continue;
    }
    const int k = size_dist(rng);
    std::vector<std::string> edge;
    while (static_cast<int>(edge.size()) < k) {
      auto label = "v" + std::to_string(node_dist(rng));
      if (std::find(edge.begin(), edge.end(), label) == edge.end()) edge.push_back(label);
    }
    edges.push_back(std::move(edge));
  }
  return edges;
}

}  // namespace hyperci::testing
