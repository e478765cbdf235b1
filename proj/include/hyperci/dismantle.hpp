#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hyperci/centrality.hpp"
#include "hyperci/hypergraph.hpp"

namespace hyperci {

enum class StrategyKind { hd, hda, hhd, hhda, ci, hyper_ci };

/// A dismantling policy. Adaptive strategies rescore the shrinking hypergraph
/// before every batch; static ones rank the original hypergraph once.
class Strategy {
public:
  static Strategy hd() { return {StrategyKind::hd, 0, false}; }
  static Strategy hda() { return {StrategyKind::hda, 0, true}; }
  static Strategy hhd() { return {StrategyKind::hhd, 0, false}; }
  static Strategy hhda() { return {StrategyKind::hhda, 0, true}; }
  static Strategy ci(int radius, bool adaptive = false);
  static Strategy hyper_ci(int radius);
  static Strategy make(StrategyKind kind, int radius = 1, bool adaptive_ci = false);

  /// Parses `hd`, `hda`, `hhd`, `hhda`, `ci[:L]`, `hyperci[:L]`; L defaults to 1
  /// and is rejected for the degree methods.
  static Strategy parse(std::string_view token, bool adaptive_ci = false);

  StrategyKind kind() const { return kind_; }
  int radius() const { return radius_; }
  bool adaptive() const { return adaptive_; }
  Measure measure() const;
  /// Token accepted by parse(), e.g. `hyperci:2`.
  std::string name() const;

  friend bool operator==(const Strategy&, const Strategy&) = default;

private:
  Strategy(StrategyKind kind, int radius, bool adaptive)
      : kind_(kind), radius_(radius), adaptive_(adaptive) {}

  StrategyKind kind_;
  int radius_;
  bool adaptive_;
};

std::string to_string(StrategyKind kind);

struct StopCondition {
  enum class Kind { all, fraction, sigma_below };
  Kind kind = Kind::all;
  double value = 0.0;

  static StopCondition all() { return {}; }
  static StopCondition fraction(double f);
  static StopCondition sigma_below(double t);
  /// `all`, `frac=F` or `sigma=T`.
  static StopCondition parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const StopCondition&, const StopCondition&) = default;
};

struct DismantleOptions {
  double batch_fraction = 0.01;
  StopCondition stop;
  Normalization norm = Normalization::remaining;
  GccRule gcc_rule = GccRule::most_nodes;
  /// Adaptive strategies rescore after every single node instead of per batch.
  bool per_node = false;
};

struct Batch {
  std::vector<std::string> removed;    // original labels, in removal order
  std::vector<NodeId> removed_origin;  // ids in the starting hypergraph
  double frac_removed = 0.0;           // cumulative, over the original node count
  double sigma_remaining = 0.0;
  double sigma_original = 0.0;
  double ratio = 0.0;  // sigma under the selected normalization / initial sigma

  friend bool operator==(const Batch&, const Batch&) = default;
};

struct Trajectory {
  Strategy strategy = Strategy::hhd();
  double batch_fraction = 0.01;
  std::size_t batch_size = 1;
  StopCondition stop;
  Normalization norm = Normalization::remaining;
  GccRule gcc_rule = GccRule::most_nodes;
  bool per_node = false;
  std::size_t original_node_count = 0;
  double initial_sigma = 1.0;
  std::vector<Batch> batches;
  double anc = 0.0;

  std::size_t removed_count() const;
};

/// Nodes removed per batch: max(1, floor(batch_fraction * n0)).
std::size_t batch_size_for(double batch_fraction, std::size_t original_node_count);

/// Runs batch removal until the stop condition holds or no node is left.
Trajectory dismantle(const Hypergraph& h, const Strategy& strategy,
                     const DismantleOptions& options = {});

/// Accumulated normalized connectivity: mean of sigma_k / sigma_0 over every
/// removed node, each node carrying the ratio observed after its batch.
double anc(const Trajectory& t);

struct ComparisonRow {
  Strategy strategy;
  double anc = 0.0;
  Trajectory trajectory;
};

/// dismantle + anc for each strategy under the same options, in input order.
std::vector<ComparisonRow> compare(const Hypergraph& h, const std::vector<Strategy>& strategies,
                                   const DismantleOptions& options = {});

struct SweepPoint {
  int radius = 1;
  double anc = 0.0;
  Trajectory trajectory;
};

/// One run per radius for a CI-family strategy kind.
std::vector<SweepPoint> l_sweep(const Hypergraph& h, StrategyKind kind,
                                const std::vector<int>& radii,
                                const DismantleOptions& options = {}, bool adaptive_ci = false);

}  // namespace hyperci
