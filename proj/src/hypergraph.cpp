#include "hyperci/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include <fmt/format.h>

namespace hyperci {

std::uint32_t Projection::at(NodeId i, NodeId j) const {
  const auto& r = rows_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const Entry& e, NodeId key) { return e.first < key; });
  return (it != r.end() && it->first == j) ? it->second : 0;
}

Hypergraph Hypergraph::build(const std::vector<LabeledEdge>& edges) {
  Hypergraph h;
  std::unordered_map<std::string, NodeId> ids;
  h.edges_.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& in = edges[e];
    if (in.labels.empty()) {
      throw Error(in.line != 0 ? fmt::format("empty hyperedge at line {}", in.line)
                               : fmt::format("empty hyperedge at index {}", e));
    }
    std::vector<NodeId> members;
    members.reserve(in.labels.size());
    for (const auto& label : in.labels) {
      auto [it, inserted] = ids.try_emplace(label, static_cast<NodeId>(h.labels_.size()));
      if (inserted) {
        h.labels_.push_back(label);
        h.origin_.push_back(it->second);
        h.node_edges_.emplace_back();
      }
      members.push_back(it->second);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (NodeId v : members) h.node_edges_[v].push_back(static_cast<EdgeId>(h.edges_.size()));
    h.edges_.push_back(std::move(members));
  }
  return h;
}

Hypergraph Hypergraph::build(const std::vector<std::vector<std::string>>& edges) {
  std::vector<LabeledEdge> labeled;
  labeled.reserve(edges.size());
  for (const auto& e : edges) labeled.push_back({e, 0});
  return build(labeled);
}

void Hypergraph::check_node(NodeId v) const {
  if (v >= labels_.size()) {
    throw Error(fmt::format("unknown node id {} (hypergraph has {} nodes)", v, labels_.size()));
  }
}

const std::string& Hypergraph::label(NodeId v) const {
  check_node(v);
  return labels_[v];
}

NodeId Hypergraph::origin(NodeId v) const {
  check_node(v);
  return origin_[v];
}

std::optional<NodeId> Hypergraph::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<NodeId>(it - labels_.begin());
}

std::span<const NodeId> Hypergraph::hyperedge(EdgeId e) const {
  if (e >= edges_.size()) throw Error(fmt::format("unknown hyperedge id {}", e));
  return edges_[e];
}

std::span<const EdgeId> Hypergraph::incident_edges(NodeId v) const {
  check_node(v);
  return node_edges_[v];
}

Projection Hypergraph::project_adjacency() const {
  const std::size_t n = labels_.size();
  std::vector<std::vector<Projection::Entry>> rows(n);
  std::vector<std::uint32_t> shared(n, 0);
  std::vector<NodeId> touched;
  for (NodeId v = 0; v < n; ++v) {
    touched.clear();
    for (EdgeId e : node_edges_[v]) {
      for (NodeId u : edges_[e]) {
        if (u == v) continue;
        if (shared[u]++ == 0) touched.push_back(u);
      }
    }
    std::sort(touched.begin(), touched.end());
    auto& row = rows[v];
    row.reserve(touched.size());
    for (NodeId u : touched) {
      row.emplace_back(u, shared[u]);
      shared[u] = 0;
    }
  }
  return Projection(std::move(rows));
}

std::vector<NodeId> Hypergraph::neighbors(NodeId v) const {
  check_node(v);
  std::vector<NodeId> out;
  for (EdgeId e : node_edges_[v]) {
    for (NodeId u : edges_[e]) {
      if (u != v) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<NodeId> Hypergraph::ball_boundary(NodeId v, int radius) const {
  check_node(v);
  if (radius < 1) throw Error(fmt::format("ball radius must be >= 1, got {}", radius));
  std::vector<bool> seen(labels_.size(), false);
  std::vector<bool> edge_used(edges_.size(), false);
  std::vector<NodeId> frontier{v};
  seen[v] = true;
  for (int depth = 0; depth < radius && !frontier.empty(); ++depth) {
    std::vector<NodeId> next;
    for (NodeId x : frontier) {
      for (EdgeId e : node_edges_[x]) {
        // an edge reached once has already put all its members in this layer
        if (edge_used[e]) continue;
        edge_used[e] = true;
        for (NodeId u : edges_[e]) {
          if (!seen[u]) {
            seen[u] = true;
            next.push_back(u);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

std::vector<Component> Hypergraph::components() const {
  const std::size_t n = labels_.size();
  constexpr auto unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp_of(n, unassigned);
  std::vector<Component> out;
  std::deque<NodeId> queue;
  for (NodeId start = 0; start < n; ++start) {
    if (comp_of[start] != unassigned) continue;
    const std::size_t c = out.size();
    out.emplace_back();
    comp_of[start] = c;
    queue.push_back(start);
    while (!queue.empty()) {
      NodeId x = queue.front();
      queue.pop_front();
      out[c].node_ids.push_back(x);
      for (EdgeId e : node_edges_[x]) {
        for (NodeId u : edges_[e]) {
          if (comp_of[u] == unassigned) {
            comp_of[u] = c;
            queue.push_back(u);
          }
        }
      }
    }
    std::sort(out[c].node_ids.begin(), out[c].node_ids.end());
  }
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    out[comp_of[edges_[e].front()]].hyperedge_ids.push_back(e);
  }
  return out;
}

Component Hypergraph::gcc(GccRule rule) const {
  if (empty()) throw Error("giant component of an empty hypergraph is undefined");
  auto comps = components();
  const auto key = [rule](const Component& c) {
    return rule == GccRule::most_nodes ? std::pair(c.node_count(), c.hyperedge_count())
                                       : std::pair(c.hyperedge_count(), c.node_count());
  };
  // components are ordered by min node id, so keeping the first maximum
  // implements the final tie-break
  std::size_t best = 0;
  for (std::size_t c = 1; c < comps.size(); ++c) {
    if (key(comps[c]) > key(comps[best])) best = c;
  }
  return std::move(comps[best]);
}

Hypergraph Hypergraph::remove_nodes(std::span<const NodeId> victims) const {
  const std::size_t n = labels_.size();
  std::vector<bool> doomed(n, false);
  for (NodeId v : victims) {
    check_node(v);
    doomed[v] = true;
  }
  constexpr auto gone = static_cast<NodeId>(-1);
  std::vector<NodeId> remap(n, gone);
  Hypergraph out;
  for (NodeId v = 0; v < n; ++v) {
    if (doomed[v]) continue;
    remap[v] = static_cast<NodeId>(out.labels_.size());
    out.labels_.push_back(labels_[v]);
    out.origin_.push_back(origin_[v]);
  }
  out.node_edges_.resize(out.labels_.size());
  for (const auto& edge : edges_) {
    std::vector<NodeId> kept;
    for (NodeId v : edge) {
      if (remap[v] != gone) kept.push_back(remap[v]);
    }
    if (kept.empty()) continue;
    const auto id = static_cast<EdgeId>(out.edges_.size());
    for (NodeId v : kept) out.node_edges_[v].push_back(id);
    out.edges_.push_back(std::move(kept));
  }
  return out;
}

DatasetStats Hypergraph::stats() const {
  if (labels_.empty() || edges_.empty()) {
    throw Error("statistics require at least one node and one hyperedge");
  }
  DatasetStats s;
  s.node_count = labels_.size();
  s.hyperedge_count = edges_.size();
  for (const auto& e : edges_) s.incidence_count += e.size();
  s.avg_hyper_degree = static_cast<double>(s.incidence_count) / static_cast<double>(s.node_count);
  s.avg_hyperedge_size =
      static_cast<double>(s.incidence_count) / static_cast<double>(s.hyperedge_count);
  return s;
}

std::string to_string(Normalization norm) {
  return norm == Normalization::remaining ? "remaining" : "original";
}

Normalization parse_normalization(std::string_view text) {
  if (text == "remaining") return Normalization::remaining;
  if (text == "original") return Normalization::original;
  throw Error(fmt::format("unknown normalization '{}' (expected remaining|original)", text));
}

std::string to_string(GccRule rule) {
  return rule == GccRule::most_nodes ? "nodes" : "hyperedges";
}

GccRule parse_gcc_rule(std::string_view text) {
  if (text == "nodes") return GccRule::most_nodes;
  if (text == "hyperedges") return GccRule::most_hyperedges;
  throw Error(fmt::format("unknown giant-component rule '{}' (expected nodes|hyperedges)", text));
}

double connectivity(const Hypergraph& h, Normalization norm, std::size_t original_count,
                    GccRule rule) {
  if (norm == Normalization::original && original_count == 0) {
    throw Error("original normalization needs a positive original node count");
  }
  if (h.empty()) return 0.0;
  const auto giant = static_cast<double>(h.gcc(rule).node_count());
  const auto denom = norm == Normalization::remaining ? h.node_count() : original_count;
  return giant / static_cast<double>(denom);
}

}  // namespace hyperci
