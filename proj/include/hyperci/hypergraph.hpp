#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperci/error.hpp"

namespace hyperci {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// A hyperedge as read from input: a list of node labels plus an optional
/// source line used in diagnostics.
struct LabeledEdge {
  std::vector<std::string> labels;
  std::size_t line = 0;
};

/// Connected component of the clique-expansion of a hypergraph.
struct Component {
  std::vector<NodeId> node_ids;       // ascending
  std::vector<EdgeId> hyperedge_ids;  // ascending, hyperedges inside the component

  std::size_t node_count() const { return node_ids.size(); }
  std::size_t hyperedge_count() const { return hyperedge_ids.size(); }
};

struct DatasetStats {
  std::size_t node_count = 0;
  std::size_t hyperedge_count = 0;
  double avg_hyper_degree = 0.0;
  double avg_hyperedge_size = 0.0;
  std::size_t incidence_count = 0;  // sum of degrees == sum of edge sizes
};

/// Sparse symmetric projection I*I^T - D. Row v holds (neighbor, shared
/// hyperedge count) pairs sorted by neighbor id; the diagonal is never stored.
class Projection {
public:
  using Entry = std::pair<NodeId, std::uint32_t>;

  Projection() = default;
  explicit Projection(std::vector<std::vector<Entry>> rows) : rows_(std::move(rows)) {}

  std::size_t size() const { return rows_.size(); }
  std::span<const Entry> row(NodeId v) const { return rows_.at(v); }
  /// Number of hyperedges shared by i and j; 0 on the diagonal.
  std::uint32_t at(NodeId i, NodeId j) const;
  /// Distinct-neighbor degree.
  std::size_t degree(NodeId v) const { return rows_.at(v).size(); }

private:
  std::vector<std::vector<Entry>> rows_;
};

/// How the giant component is chosen among components.
///  - most_nodes: most nodes, then most hyperedges, then smallest min node id.
///  - most_hyperedges: most contained hyperedges, then most nodes, then
///    smallest min node id. Under this rule the giant component can switch
///    to a larger-node component after a removal, so connectivity is not
///    monotone in the removal sequence.
enum class GccRule { most_nodes, most_hyperedges };

std::string to_string(GccRule rule);
GccRule parse_gcc_rule(std::string_view text);

/// Immutable hypergraph H = (X, E) over dense node ids 0..n-1.
///
/// Every node keeps its input label and the id it had in the hypergraph the
/// dismantling started from (`origin`). Node removal renumbers survivors in
/// ascending order, so relative id order always matches origin order.
class Hypergraph {
public:
  Hypergraph() = default;

  /// Builds from labeled hyperedges. Labels get dense ids in first-seen order;
  /// repeated labels inside one hyperedge collapse; repeated hyperedges stay
  /// distinct. Throws Error on an empty hyperedge.
  static Hypergraph build(const std::vector<LabeledEdge>& edges);
  static Hypergraph build(const std::vector<std::vector<std::string>>& edges);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t hyperedge_count() const { return edges_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::string& label(NodeId v) const;
  NodeId origin(NodeId v) const;
  std::optional<NodeId> find(std::string_view label) const;
  const std::vector<std::string>& labels() const { return labels_; }

  std::span<const NodeId> hyperedge(EdgeId e) const;
  /// Sorted incident hyperedge ids of v (one row of the incidence matrix).
  std::span<const EdgeId> incident_edges(NodeId v) const;
  const std::vector<std::vector<NodeId>>& hyperedges() const { return edges_; }

  /// Hyper-degree: number of incident hyperedges.
  std::size_t hhd(NodeId v) const { return incident_edges(v).size(); }

  Projection project_adjacency() const;
  /// Nodes other than v that share at least one hyperedge with v, ascending.
  std::vector<NodeId> neighbors(NodeId v) const;
  /// Nodes at shortest-path distance exactly `radius` from v in the projection.
  std::vector<NodeId> ball_boundary(NodeId v, int radius) const;

  /// Components ordered by smallest node id.
  std::vector<Component> components() const;
  /// Giant component under `rule`. Throws on an empty hypergraph.
  Component gcc(GccRule rule = GccRule::most_nodes) const;

  /// Removes victims from every hyperedge, drops hyperedges left empty and
  /// keeps the ones that shrink to a single node.
  Hypergraph remove_nodes(std::span<const NodeId> victims) const;

  DatasetStats stats() const;

private:
  void check_node(NodeId v) const;

  std::vector<std::string> labels_;
  std::vector<NodeId> origin_;
  std::vector<std::vector<NodeId>> edges_;
  std::vector<std::vector<EdgeId>> node_edges_;
};

enum class Normalization { remaining, original };

std::string to_string(Normalization norm);
Normalization parse_normalization(std::string_view text);

/// |V_GCC| divided by the current node count (`remaining`) or by
/// `original_count` (`original`). An empty hypergraph has connectivity 0.
double connectivity(const Hypergraph& h, Normalization norm, std::size_t original_count = 0,
                    GccRule rule = GccRule::most_nodes);

}  // namespace hyperci
